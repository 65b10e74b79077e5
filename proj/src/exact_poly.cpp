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

#include "weylspec/exact_poly.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

#include "weylspec/error.hpp"

namespace weylspec {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(int degree, BigInt coeff) {
    std::vector<BigInt> c(static_cast<size_t>(degree) + 1, 0);
    c.back() = std::move(coeff);
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& monic_divisor) const {
    if (!monic_divisor.is_monic()) throw Error(ErrorCode::InvalidArgument, "divisor must be monic");
    const int dd = monic_divisor.degree();
    if (degree() < dd) return {IntPoly{}, *this};
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(static_cast<size_t>(degree() - dd) + 1, 0);
    for (int k = degree(); k >= dd; --k) {
        const BigInt lead = rem[k];
        if (lead == 0) continue;
        quot[k - dd] = lead;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= lead * monic_divisor.coeffs_[j];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag;
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

BigInt eval_poly(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeffs()[k];
    return acc;
}

std::uint64_t totient(std::uint64_t d) {
    std::uint64_t result = d;
    std::uint64_t n = d;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<int> divisors(int n) {
    std::vector<int> small, large;
    for (int k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        small.push_back(k);
        if (k != n / k) large.push_back(n / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

IntPoly cyclotomic(int d) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
    static std::mutex mutex;
    static std::map<int, IntPoly> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(d); it != memo.end()) return it->second;
    }
    IntPoly p = IntPoly::monomial(d) - IntPoly{1};
    for (int e : divisors(d)) {
        if (e == d) continue;
        auto [q, r] = p.divmod(cyclotomic(e));
        if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact cyclotomic division");
        p = std::move(q);
    }
    std::lock_guard lock(mutex);
    return memo.emplace(d, std::move(p)).first->second;
}

IntPoly char_poly(const IntMatrix& m) {
    const int n = m.size();
    if (n == 0) return IntPoly{1};

    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

    // transforms[s] is the (size+1) x size Toeplitz matrix for leading block
    // of dimension `size`, stored column-major by its first column.
    std::vector<std::vector<BigInt>> toeplitz_columns;
    for (int size = n; size >= 2; --size) {
        const int k = size - 1;
        std::vector<BigInt> col(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) col[i] = a[i][k];
        std::vector<BigInt> items{1, -a[k][k]};
        for (int step = 0; step < size - 1; ++step) {
            BigInt dot = 0;
            for (int j = 0; j < k; ++j) dot -= a[k][j] * col[j];
            items.push_back(dot);
            if (step + 1 < size - 1) {
                std::vector<BigInt> next(static_cast<size_t>(k), 0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) next[i] += a[i][j] * col[j];
                col = std::move(next);
            }
        }
        toeplitz_columns.push_back(std::move(items));
    }

    // Highest degree first while accumulating.
    std::vector<BigInt> poly{1, -a[0][0]};
    for (auto it = toeplitz_columns.rbegin(); it != toeplitz_columns.rend(); ++it) {
        const auto& items = *it;
        const size_t rows = poly.size() + 1;
        std::vector<BigInt> next(rows, 0);
        for (size_t c = 0; c < poly.size(); ++c)
            for (size_t r = c; r < rows; ++r) next[r] += items[r - c] * poly[c];
        poly = std::move(next);
    }
    std::reverse(poly.begin(), poly.end());
    return IntPoly(std::move(poly));
}

IntPoly char_poly_from_power_traces(std::span<const std::int64_t> traces) {
    const size_t n = traces.size();
    std::vector<BigInt> e(n + 1, 0);
    e[0] = 1;
    for (size_t k = 1; k <= n; ++k) {
        BigInt acc = 0;
        for (size_t i = 1; i <= k; ++i) {
            BigInt term = e[k - i] * traces[i - 1];
            if (i % 2 == 1) acc += term;
            else acc -= term;
        }
        if (acc % k != 0) throw Error(ErrorCode::InvalidArgument, "power traces are not integral-consistent");
        e[k] = acc / k;
    }
    std::vector<BigInt> coeffs(n + 1);
    for (size_t k = 0; k <= n; ++k) coeffs[n - k] = (k % 2 == 0) ? e[k] : BigInt(-e[k]);
    return IntPoly(std::move(coeffs));
}

CycloPoly::CycloPoly(std::map<int, int> factors) : factors_(std::move(factors)) {
    for (auto it = factors_.begin(); it != factors_.end();) {
        if (it->first < 1 || it->second < 0) throw Error(ErrorCode::InvalidArgument, "bad cyclotomic factor");
        it = it->second == 0 ? factors_.erase(it) : std::next(it);
    }
}

int CycloPoly::multiplicity(int d) const {
    auto it = factors_.find(d);
    return it == factors_.end() ? 0 : it->second;
}

int CycloPoly::degree() const {
    int deg = 0;
    for (auto [d, mult] : factors_) deg += mult * static_cast<int>(totient(d));
    return deg;
}

void CycloPoly::add(int d, int mult) {
    if (mult == 0) return;
    factors_[d] += mult;
}

CycloPoly CycloPoly::operator*(const CycloPoly& rhs) const {
    CycloPoly out = *this;
    out *= rhs;
    return out;
}

CycloPoly& CycloPoly::operator*=(const CycloPoly& rhs) {
    for (auto [d, mult] : rhs.factors_) factors_[d] += mult;
    return *this;
}

IntPoly CycloPoly::expand() const {
    IntPoly out{1};
    for (auto [d, mult] : factors_) {
        const IntPoly phi = cyclotomic(d);
        for (int k = 0; k < mult; ++k) out = out * phi;
    }
    return out;
}

std::string CycloPoly::text() const {
    std::string out;
    for (auto [d, mult] : factors_) {
        if (!out.empty()) out += ',';
        out += std::to_string(d);
        out += ':';
        out += std::to_string(mult);
    }
    return out;
}

CycloPoly CycloPoly::parse(std::string_view text) {
    std::map<int, int> factors;
    size_t pos = 0;
    auto number = [&]() -> int {
        size_t start = pos;
        long v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) break;
            ++pos;
        }
        if (pos == start || v > 1'000'000)
            throw Error(ErrorCode::DataCorrupt, "bad cyclotomic factor list '" + std::string(text) + "'");
        return static_cast<int>(v);
    };
    int last = 0;
    while (pos < text.size()) {
        int d = number();
        if (pos >= text.size() || text[pos] != ':')
            throw Error(ErrorCode::DataCorrupt, "expected ':' in '" + std::string(text) + "'");
        ++pos;
        int m = number();
        if (d <= last || m == 0)
            throw Error(ErrorCode::DataCorrupt, "non-canonical factor list '" + std::string(text) + "'");
        factors[d] = m;
        last = d;
        if (pos < text.size()) {
            if (text[pos] != ',') throw Error(ErrorCode::DataCorrupt, "expected ',' in '" + std::string(text) + "'");
            ++pos;
            if (pos == text.size()) throw Error(ErrorCode::DataCorrupt, "trailing ',' in '" + std::string(text) + "'");
        }
    }
    return CycloPoly(std::move(factors));
}

std::uint64_t CycloPoly::element_order() const {
    std::uint64_t order = 1;
    for (auto [d, mult] : factors_) order = std::lcm(order, static_cast<std::uint64_t>(d));
    return order;
}

CycloPoly cyclo_factor(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic())
        throw Error(ErrorCode::NotCyclotomicProduct, "polynomial " + p.to_string() + " is not monic");
    const int n = p.degree();
    CycloPoly out;
    IntPoly rest = p;
    const int bound = 2 * n * n + 2;
    for (int d = 1; d <= bound && rest.degree() > 0; ++d) {
        const auto phi_deg = static_cast<int>(totient(d));
        if (phi_deg > n) continue;
        const IntPoly phi = cyclotomic(d);
        while (rest.degree() >= phi_deg) {
            auto [q, r] = rest.divmod(phi);
            if (!r.is_zero()) break;
            rest = std::move(q);
            out.add(d);
        }
    }
    if (rest != IntPoly{1})
        throw Error(ErrorCode::NotCyclotomicProduct,
                    "polynomial " + p.to_string() + " has a non-cyclotomic factor " + rest.to_string());
    return out;
}

CycloPoly cyclo_x_pow_minus_one(int a) {
    CycloPoly out;
    for (int d : divisors(a)) out.add(d);
    return out;
}

CycloPoly cyclo_x_pow_plus_one(int a) {
    // x^a + 1 = (x^{2a} - 1) / (x^a - 1)
    CycloPoly out;
    for (int d : divisors(2 * a))
        if (a % d != 0) out.add(d);
    return out;
}

}  // namespace weylspec
