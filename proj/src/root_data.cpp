/*
   Copyright 2026 The weylspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "weylspec/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "weylspec/error.hpp"

namespace weylspec {

namespace {

constexpr int kMaxRank = 1000;

Family family_from_char(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
        default: break;
    }
    throw Error(ErrorCode::ParseError, std::string("unknown family '") + c + "'");
}

[[noreturn]] void rank_error(Family f, int rank) {
    throw Error(ErrorCode::RankError, "rank " + std::to_string(rank) + " is not valid for family " +
                                          std::string(1, static_cast<char>(f)));
}

}  // namespace

std::string SimpleType::label() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

bool SimpleType::is_exceptional() const noexcept {
    return family == Family::E || family == Family::F || family == Family::G;
}

SemisimpleType::SemisimpleType(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
}

int SemisimpleType::total_rank() const noexcept {
    int r = 0;
    for (const auto& f : factors_) r += f.rank;
    return r;
}

std::string SemisimpleType::canonical() const {
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += 'x';
        out += f.label();
    }
    return out;
}

SemisimpleType SemisimpleType::operator*(const SemisimpleType& other) const {
    std::vector<SimpleType> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return SemisimpleType(std::move(all));
}

std::vector<SimpleType> canonicalize(Family family, int rank) {
    if (rank < 1 || rank > kMaxRank) rank_error(family, rank);
    switch (family) {
        case Family::A:
            return {{Family::A, rank}};
        case Family::B:
            if (rank == 1) return {{Family::A, 1}};
            return {{Family::B, rank}};
        case Family::C:
            if (rank == 1) return {{Family::A, 1}};
            if (rank == 2) return {{Family::B, 2}};
            return {{Family::C, rank}};
        case Family::D:
            if (rank == 1) return {{Family::A, 1}};
            if (rank == 2) return {{Family::A, 1}, {Family::A, 1}};
            if (rank == 3) return {{Family::A, 3}};
            return {{Family::D, rank}};
        case Family::E:
            if (rank < 6 || rank > 8) rank_error(family, rank);
            return {{Family::E, rank}};
        case Family::F:
            if (rank != 4) rank_error(family, rank);
            return {{Family::F, 4}};
        case Family::G:
            if (rank != 2) rank_error(family, rank);
            return {{Family::G, 2}};
    }
    rank_error(family, rank);
}

SimpleType make_simple(Family family, int rank) {
    auto c = canonicalize(family, rank);
    if (c.size() != 1 || c.front().family != family) rank_error(family, rank);
    return c.front();
}

SemisimpleType parse_type(std::string_view expr) {
    std::string s;
    for (char c : expr)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty type expression");

    auto read_number = [&](size_t& pos) -> long {
        size_t start = pos;
        long value = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = value * 10 + (s[pos] - '0');
            if (value > 1'000'000) throw Error(ErrorCode::ParseError, "number too large in '" + s + "'");
            ++pos;
        }
        if (pos == start) return -1;
        return value;
    };

    std::vector<SimpleType> factors;
    size_t pos = 0;
    while (true) {
        long mult = 1;
        size_t save = pos;
        long lead = read_number(pos);
        if (lead >= 0) {
            if (pos >= s.size() || s[pos] != '*')
                throw Error(ErrorCode::ParseError, "expected '*' after multiplicity at offset " + std::to_string(save));
            ++pos;
            if (lead == 0) throw Error(ErrorCode::ParseError, "multiplicity must be positive");
            mult = lead;
        }
        if (pos >= s.size()) throw Error(ErrorCode::ParseError, "expected family letter at end of '" + s + "'");
        Family fam = family_from_char(s[pos++]);
        long rank = read_number(pos);
        if (rank < 0) throw Error(ErrorCode::ParseError, "expected rank after family at offset " + std::to_string(pos));
        if (rank > kMaxRank) rank_error(fam, static_cast<int>(rank));
        auto canon = canonicalize(fam, static_cast<int>(rank));
        for (long k = 0; k < mult; ++k) factors.insert(factors.end(), canon.begin(), canon.end());
        if (pos == s.size()) break;
        if (s[pos] != 'X') throw Error(ErrorCode::ParseError, std::string("unexpected '") + s[pos] + "' in '" + s + "'");
        ++pos;
    }
    return SemisimpleType(std::move(factors));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(static_cast<int>(rows.size())) {
    data_.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_) throw Error(ErrorCode::InvalidArgument, "matrix must be square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (n_ != rhs.n_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            std::int64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::vector<std::int64_t> IntMatrix::operator*(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != n_) throw Error(ErrorCode::InvalidArgument, "vector size mismatch");
    std::vector<std::int64_t> out(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

// Bareiss elimination; every division is exact.
std::int64_t IntMatrix::determinant() const {
    if (n_ == 0) return 1;
    std::vector<BigInt> a(data_.begin(), data_.end());
    auto at = [&](int r, int c) -> BigInt& { return a[static_cast<size_t>(r) * n_ + c]; };
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n_ - 1; ++k) {
        if (at(k, k) == 0) {
            int swap = -1;
            for (int r = k + 1; r < n_; ++r)
                if (at(r, k) != 0) { swap = r; break; }
            if (swap < 0) return 0;
            for (int c = 0; c < n_; ++c) std::swap(at(k, c), at(swap, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return sign * static_cast<std::int64_t>(at(n_ - 1, n_ - 1));
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.size() + b.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j) out(a.size() + i, a.size() + j) = b(i, j);
    return out;
}

IntMatrix cartan_matrix(SimpleType t) {
    const int n = t.rank;
    IntMatrix c(n);
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    auto bond = [&](int i, int j) { c(i, j) = -1; c(j, i) = -1; };

    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c(n - 1, n - 2) = -2;  // alpha_n short
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c(n - 2, n - 1) = -2;  // alpha_n long
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case Family::E:
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
            bond(0, 2);
            bond(1, 3);
            for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::F:
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
            c(2, 1) = -2;
            break;
        case Family::G:
            c(0, 1) = -1;
            c(1, 0) = -3;
            break;
    }
    return c;
}

std::vector<IntMatrix> simple_reflections(SimpleType t) {
    const IntMatrix c = cartan_matrix(t);
    const int n = t.rank;
    std::vector<IntMatrix> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        IntMatrix s = IntMatrix::identity(n);
        for (int j = 0; j < n; ++j) s(i, j) -= c(i, j);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<RootVector> roots(SimpleType t) {
    const auto refl = simple_reflections(t);
    const int n = t.rank;
    std::set<RootVector> seen;
    std::deque<RootVector> queue;
    for (int i = 0; i < n; ++i) {
        RootVector e(n, 0);
        e[i] = 1;
        if (seen.insert(e).second) queue.push_back(e);
    }
    while (!queue.empty()) {
        RootVector r = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : refl) {
            RootVector img = s * r;
            if (seen.insert(img).second) queue.push_back(std::move(img));
        }
    }

    std::vector<RootVector> positive;
    for (const auto& r : seen)
        if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x >= 0; })) positive.push_back(r);
    std::sort(positive.begin(), positive.end(), [](const RootVector& a, const RootVector& b) {
        auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
        auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
        if (ha != hb) return ha < hb;
        return a > b;
    });
    std::vector<RootVector> all = positive;
    for (const auto& r : positive) {
        RootVector neg = r;
        for (auto& x : neg) x = -x;
        all.push_back(std::move(neg));
    }
    return all;
}

std::vector<int> degrees(SimpleType t) {
    const int n = t.rank;
    std::vector<int> d;
    switch (t.family) {
        case Family::A:
            for (int k = 2; k <= n + 1; ++k) d.push_back(k);
            break;
        case Family::B:
        case Family::C:
            for (int k = 1; k <= n; ++k) d.push_back(2 * k);
            break;
        case Family::D:
            for (int k = 1; k <= n - 1; ++k) d.push_back(2 * k);
            d.push_back(n);
            break;
        case Family::E:
            if (n == 6) d = {2, 5, 6, 8, 9, 12};
            if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
            if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        case Family::F:
            d = {2, 6, 8, 12};
            break;
        case Family::G:
            d = {2, 6};
            break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

BigInt weyl_order(SimpleType t) {
    BigInt order = 1;
    for (int d : degrees(t)) order *= d;
    return order;
}

BigInt weyl_order(const SemisimpleType& t) {
    BigInt order = 1;
    for (const auto& f : t.factors()) order *= weyl_order(f);
    return order;
}

}  // namespace weylspec
