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

#include <doctest.h>

#include <algorithm>
#include <climits>

#include "oracle.hpp"
#include "test_util.hpp"
#include "weylspec/invariants.hpp"

using namespace weylspec;
using testutil::error_of;
using testutil::simple;

namespace {

// Direct readings of the three definitions over an explicit set of polynomials.
int naive_m(const std::set<CycloPoly>& s, int i) {
    int best = 0;
    for (const auto& p : s) best = std::max(best, p.multiplicity(i));
    return best;
}

int naive_m_prime(const std::set<CycloPoly>& s, int i) {
    if (i == 2) return 0;
    const int mi = naive_m(s, i);
    int best = INT_MAX;
    for (const auto& p : s)
        if (p.multiplicity(i) >= mi) best = std::min(best, p.multiplicity(2));
    return best;
}

int naive_m_pair(const std::set<CycloPoly>& s, int i, int j) {
    int best = 0;
    for (const auto& p : s) best = std::max(best, p.multiplicity(i) + p.multiplicity(j));
    return best;
}

}  // namespace

TEST_CASE("ch_star examples") {
    CHECK(ch_star(spectrum(simple("G2"))) == std::set<int>{1, 2, 3, 6});
    CHECK(ch_star(spectrum(simple("A1"))) == std::set<int>{1, 2});
    CHECK(ch_star(spectrum(simple("F4"))) == std::set<int>{1, 2, 3, 4, 6, 8, 12});
}

TEST_CASE("m examples") {
    CHECK(m(spectrum(simple("E8")), 30) == 1);
    CHECK(m(spectrum(simple("B2")), 4) == 1);
    for (int n = 1; n <= 12; ++n) CHECK(m(spectrum_A(n), 1) == n);
}

TEST_CASE("m_prime examples") {
    CHECK(m_prime(spectrum(simple("D4")), 6) == 2);
    CHECK(m_prime(spectrum(simple("B3")), 6) == 1);
    for (auto t : testutil::simple_types_up_to(8)) CHECK(m_prime(spectrum(t), 2) == 0);
    CHECK(m_prime(spectrum(simple("B2")), 4) == 0);
    // Absent index: spectrum-wide minimum Phi_2 multiplicity.
    CHECK(m_prime(spectrum(simple("B2")), 5) == 0);
    CHECK(m_prime(spectrum(simple("E6")), 30) == 0);
}

TEST_CASE("m_pair examples") {
    CHECK(m_pair(spectrum(parse_type("B3 x G2")), 4, 6) == 2);
    for (auto name : {"A3", "B4", "E6", "A1 x G2", "D5"}) {
        const auto s = spectrum(parse_type(name));
        CHECK(m_pair(s, 1, 2) <= s.n);
    }
    CHECK(m_pair(spectrum(simple("B15")), 28, 30) == 1);
    CHECK(error_of([] { m_pair(spectrum(simple("A2")), 3, 3); }) == ErrorCode::InvalidPair);
}

TEST_CASE("springer_ch_star examples") {
    CHECK(springer_ch_star(simple("B6")) == std::set<int>{1, 2, 3, 4, 5, 6, 8, 10, 12});
    CHECK(springer_ch_star(simple("E7")) == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18});
    CHECK(springer_ch_star(simple("A3")) == std::set<int>{1, 2, 3, 4});
}

TEST_CASE("invariant_table examples") {
    const auto g2 = spectrum(simple("G2"));
    const auto table = invariant_table(g2, {1, 2, 3, 6});
    CHECK(table.m == std::map<int, int>{{1, 2}, {2, 2}, {3, 1}, {6, 1}});
    CHECK(table.ch_star == std::set<int>{1, 2, 3, 6});
    CHECK(table.n == 2);
    const auto empty = invariant_table(g2, {});
    CHECK(empty.m.empty());
    CHECK(empty.m_prime.empty());
    CHECK(empty.m_pair.empty());
    const auto a1 = invariant_table(spectrum(simple("A1")), {1, 2});
    const auto a1a1 = invariant_table(spectrum(parse_type("A1 x A1")), {1, 2});
    for (int i : {1, 2}) CHECK(a1a1.m.at(i) == 2 * a1.m.at(i));
    const auto with_pairs = invariant_table(g2, {3}, {{3, 6}, {1, 2}});
    CHECK(with_pairs.m_pair.at({3, 6}) == 1);
    CHECK(with_pairs.m_pair.at({1, 2}) == 2);
    CHECK(error_of([&] { invariant_table(g2, {}, {{2, 2}}); }) == ErrorCode::InvalidPair);
}

TEST_CASE("invariants agree with the naive definitions") {
    for (auto t : testutil::simple_types_up_to(8)) {
        CAPTURE(t.label());
        const auto s = spectrum(t);
        const SpectrumInvariants inv(s);
        const auto universe = index_universe(t.rank);
        for (int i : universe) {
            CHECK(m(s, i) == naive_m(s.polys, i));
            CHECK(inv.m(i) == naive_m(s.polys, i));
            CHECK(m_prime(s, i) == naive_m_prime(s.polys, i));
            CHECK(inv.m_prime(i) == naive_m_prime(s.polys, i));
            for (int j : universe)
                if (i < j) CHECK(m_pair(s, i, j) == naive_m_pair(s.polys, i, j));
        }
    }
}

TEST_CASE("table invariants: bounds, support, m'_2") {
    for (auto t : testutil::simple_types_up_to(9)) {
        const auto s = spectrum(t);
        const auto universe = index_universe(t.rank);
        const std::set<int> idx(universe.begin(), universe.end());
        std::vector<std::pair<int, int>> pairs;
        for (int i : universe)
            for (int j : universe)
                if (i < j) pairs.emplace_back(i, j);
        const auto table = invariant_table(s, idx, pairs);
        for (int d : universe) {
            CHECK((table.m.at(d) >= 1) == table.ch_star.contains(d));
            CHECK(table.m.at(d) * static_cast<int>(totient(d)) <= t.rank);
        }
        for (const auto& [ij, v] : table.m_pair) CHECK(v <= table.m.at(ij.first) + table.m.at(ij.second));
        CHECK(table.m_prime.at(2) == 0);
        // Every d with phi(d) <= n is in the universe, and no larger d can divide a degree-n member.
        for (int d = 1; d <= 2 * t.rank * t.rank + 2; ++d)
            CHECK((static_cast<int>(totient(d)) <= t.rank) == idx.contains(d));
    }
}

TEST_CASE("ch_star cross-checks against the degrees") {
    for (auto t : testutil::simple_types_up_to(14)) {
        CAPTURE(t.label());
        CHECK(ch_star(spectrum(t)) == springer_ch_star(t));
        CHECK(tabulated_ch_star(t) == springer_ch_star(t));
    }
}

TEST_CASE("additivity under products up to total rank 8") {
    const auto types = testutil::simple_types_up_to(7);
    std::size_t checked = 0;
    for (std::size_t a = 0; a < types.size(); ++a)
        for (std::size_t b = a; b < types.size(); ++b) {
            if (types[a].rank + types[b].rank > 8) continue;
            const auto s1 = spectrum(types[a]);
            const auto s2 = spectrum(types[b]);
            const auto s12 = spectrum(SemisimpleType({types[a], types[b]}));
            const auto universe = index_universe(s12.n);
            for (int i : universe) {
                CHECK(m(s12, i) == m(s1, i) + m(s2, i));
                CHECK(m_prime(s12, i) == m_prime(s1, i) + m_prime(s2, i));
                for (int j : universe)
                    if (i < j) CHECK(m_pair(s12, i, j) == m_pair(s1, i, j) + m_pair(s2, i, j));
            }
            ++checked;
        }
    CHECK(checked > 100);
}

TEST_CASE("closed-form classical invariants match spectrum invariants") {
    for (int n = 1; n <= 16; ++n) {
        std::vector<SimpleType> ts{{Family::A, n}};
        if (n >= 2) ts.push_back({Family::B, n});
        if (n >= 3) ts.push_back({Family::C, n});
        if (n >= 4) ts.push_back({Family::D, n});
        for (auto t : ts) {
            CAPTURE(t.label());
            const ClassicalInvariants closed(t);
            const SpectrumInvariants direct(spectrum(t));
            const auto universe = index_universe(n);
            for (int i : universe) {
                REQUIRE(closed.m(i) == direct.m(i));
                REQUIRE(closed.m_prime(i) == direct.m_prime(i));
            }
            for (int i : {1, 2, 3, 4, 6, 2 * n - 2, 2 * n, n, n + 1})
                for (int j : {2, 5, 8, 2 * n - 4, 2 * n, n - 1})
                    if (i != j && i >= 1 && j >= 1) REQUIRE(closed.m_pair(i, j) == direct.m_pair(i, j));
        }
    }
}

TEST_CASE("simple_invariants picks a source that agrees with the spectrum") {
    for (auto t : testutil::simple_types_up_to(8)) {
        const auto src = simple_invariants(t);
        const SpectrumInvariants direct(spectrum(t));
        CHECK(src->degree() == t.rank);
        for (int i : index_universe(t.rank)) CHECK(src->m(i) == direct.m(i));
    }
    const auto big = simple_invariants({Family::D, 40});
    CHECK(big->m(78) == 1);
    CHECK(big->m_prime(78) == 2);
    CHECK(big->m(1) == 40);
}
