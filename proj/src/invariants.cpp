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

#include "weylspec/invariants.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>

#include "weylspec/error.hpp"

namespace weylspec {

std::set<int> ch_star(const Spectrum& s) {
    std::set<int> out;
    for (const auto& p : s.polys)
        for (const auto& [d, mult] : p.factors()) out.insert(d);
    return out;
}

int m(const Spectrum& s, int i) {
    int best = 0;
    for (const auto& p : s.polys) best = std::max(best, p.multiplicity(i));
    return best;
}

int m_prime(const Spectrum& s, int i) {
    if (i == 2) return 0;
    const int top = m(s, i);
    int best = std::numeric_limits<int>::max();
    for (const auto& p : s.polys)
        if (p.multiplicity(i) == top) best = std::min(best, p.multiplicity(2));
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

int m_pair(const Spectrum& s, int i, int j) {
    if (i == j) throw Error(ErrorCode::InvalidPair, "m_pair needs distinct indices, got " + std::to_string(i) + " twice");
    int best = 0;
    for (const auto& p : s.polys) best = std::max(best, p.multiplicity(i) + p.multiplicity(j));
    return best;
}

std::set<int> springer_ch_star(SimpleType t) {
    std::set<int> out;
    for (int d : degrees(t))
        for (int e : divisors(d)) out.insert(e);
    return out;
}

std::set<int> tabulated_ch_star(SimpleType t) {
    const int n = t.rank;
    std::set<int> out;
    switch (t.family) {
        case Family::A:
            for (int i = 1; i <= n + 1; ++i) out.insert(i);
            return out;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= n; ++i) out.insert({i, 2 * i});
            return out;
        case Family::D:
            for (int i = 1; i <= n; ++i) out.insert(i);
            for (int j = 1; j <= n - 1; ++j) out.insert(2 * j);
            return out;
        case Family::G: return {1, 2, 3, 6};
        case Family::F: return {1, 2, 3, 4, 6, 8, 12};
        case Family::E:
            if (n == 6) return {1, 2, 3, 4, 5, 6, 8, 9, 12};
            if (n == 7) return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};
            return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30};
    }
    return out;
}

std::vector<int> index_universe(int n) {
    if (n <= 0) return {};
    // totient(d) >= sqrt(d / 2), so every candidate lies below 2n^2 + 1.
    const std::size_t limit = 2 * static_cast<std::size_t>(n) * n + 2;
    std::vector<std::uint32_t> phi(limit + 1);
    for (std::size_t d = 0; d <= limit; ++d) phi[d] = static_cast<std::uint32_t>(d);
    for (std::size_t p = 2; p <= limit; ++p) {
        if (phi[p] != p) continue;
        for (std::size_t k = p; k <= limit; k += p) phi[k] -= phi[k] / static_cast<std::uint32_t>(p);
    }
    std::vector<int> out;
    for (std::size_t d = 1; d <= limit; ++d)
        if (phi[d] <= static_cast<std::uint32_t>(n)) out.push_back(static_cast<int>(d));
    return out;
}

InvariantTable invariant_table(const Spectrum& s, const std::set<int>& indices,
                               const std::vector<std::pair<int, int>>& pairs) {
    InvariantTable table;
    table.n = s.n;
    table.ch_star = ch_star(s);
    for (int i : indices) {
        table.m[i] = m(s, i);
        table.m_prime[i] = m_prime(s, i);
    }
    for (auto [i, j] : pairs) table.m_pair[{i, j}] = m_pair(s, i, j);
    return table;
}

namespace {

// Lexicographic (primary, secondary) objective, additive over cycles.
struct Score {
    int primary = 0;
    int secondary = 0;
    auto operator<=>(const Score&) const = default;
    Score operator+(const Score& o) const { return {primary + o.primary, secondary + o.secondary}; }
};

// Multiplicity of Phi_d in x^l - 1 (positive cycle) or x^l + 1 (negative cycle).
int cycle_mult(int d, int l, bool negative) {
    if (!negative) return l % d == 0 ? 1 : 0;
    return (2 * l) % d == 0 && l % d != 0 ? 1 : 0;
}

// Best total score over signed cycle types of size `total`. For family A
// only positive cycles are allowed; for D the number of negative cycles
// must be even.
template <class Contribution>
Score best_cycle_type(Family family, int total, Contribution&& contrib) {
    const bool allow_negative = family != Family::A;
    const bool need_even = family == Family::D;
    std::vector<std::array<std::optional<Score>, 2>> best(total + 1);
    best[0][0] = Score{};
    for (int s = 1; s <= total; ++s) {
        for (int l = 1; l <= s; ++l) {
            for (int negative = 0; negative <= (allow_negative ? 1 : 0); ++negative) {
                const Score add = contrib(l, negative == 1);
                for (int parity = 0; parity < 2; ++parity) {
                    const auto& prev = best[s - l][parity];
                    if (!prev) continue;
                    const int next_parity = parity ^ negative;
                    auto& slot = best[s][next_parity];
                    const Score cand = *prev + add;
                    if (!slot || *slot < cand) slot = cand;
                }
            }
        }
    }
    if (need_even) return *best[total][0];
    if (!best[total][1]) return *best[total][0];
    if (!best[total][0]) return *best[total][1];
    return std::max(*best[total][0], *best[total][1]);
}

}  // namespace

ClassicalInvariants::ClassicalInvariants(SimpleType t) : t_(t) {
    if (!t.is_classical()) throw Error(ErrorCode::InvalidArgument, t.label() + " is not classical");
}

// Family A works with permutations of n + 1 points; the trivial summand
// contributes one Phi_1 to every member, removed at the end.
int ClassicalInvariants::m(int i) const {
    const int total = t_.family == Family::A ? t_.rank + 1 : t_.rank;
    const Score s = best_cycle_type(t_.family, total, [&](int l, bool neg) { return Score{cycle_mult(i, l, neg), 0}; });
    return s.primary - (t_.family == Family::A && i == 1 ? 1 : 0);
}

int ClassicalInvariants::m_prime(int i) const {
    if (i == 2) return 0;
    const int total = t_.family == Family::A ? t_.rank + 1 : t_.rank;
    const Score s = best_cycle_type(t_.family, total, [&](int l, bool neg) {
        return Score{cycle_mult(i, l, neg), -cycle_mult(2, l, neg)};
    });
    return -s.secondary;
}

int ClassicalInvariants::m_pair(int i, int j) const {
    if (i == j) throw Error(ErrorCode::InvalidPair, "m_pair needs distinct indices, got " + std::to_string(i) + " twice");
    const int total = t_.family == Family::A ? t_.rank + 1 : t_.rank;
    const Score s = best_cycle_type(t_.family, total, [&](int l, bool neg) {
        return Score{cycle_mult(i, l, neg) + cycle_mult(j, l, neg), 0};
    });
    return s.primary - (t_.family == Family::A && (i == 1 || j == 1) ? 1 : 0);
}

SpectrumInvariants::SpectrumInvariants(Spectrum s) : s_(std::move(s)) {
    min_phi2_ = std::numeric_limits<int>::max();
    for (const auto& p : s_.polys) {
        min_phi2_ = std::min(min_phi2_, p.multiplicity(2));
        for (const auto& [d, mult] : p.factors()) m_[d] = std::max(m_[d], mult);
    }
    if (s_.polys.empty()) min_phi2_ = 0;
    for (const auto& p : s_.polys)
        for (const auto& [d, mult] : p.factors()) {
            if (d == 2 || mult != m_[d]) continue;
            auto [it, fresh] = m_prime_.try_emplace(d, p.multiplicity(2));
            if (!fresh) it->second = std::min(it->second, p.multiplicity(2));
        }
}

int SpectrumInvariants::m(int i) const {
    const auto it = m_.find(i);
    return it == m_.end() ? 0 : it->second;
}

int SpectrumInvariants::m_prime(int i) const {
    if (i == 2) return 0;
    const auto it = m_prime_.find(i);
    return it == m_prime_.end() ? min_phi2_ : it->second;
}

std::unique_ptr<InvariantSource> simple_invariants(SimpleType t, const SpectrumOptions& options) {
    if (t.is_classical()) return std::make_unique<ClassicalInvariants>(t);
    return std::make_unique<SpectrumInvariants>(spectrum(t, options));
}

}  // namespace weylspec
