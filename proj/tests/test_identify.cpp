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
#include <random>

#include "oracle.hpp"
#include "test_util.hpp"
#include "weylspec/identify.hpp"

using namespace weylspec;
using testutil::error_of;
using testutil::simple;

namespace {

bool has_e8(const SemisimpleType& t) {
    return std::any_of(t.factors().begin(), t.factors().end(),
                       [](SimpleType f) { return f.family == Family::E && f.rank == 8; });
}

// Collapsed simple types of rank exactly r (C folded into B).
std::vector<SimpleType> collapsed_of_rank(int r) {
    std::vector<SimpleType> out{{Family::A, r}};
    if (r >= 2) out.push_back({Family::B, r});
    if (r >= 4) out.push_back({Family::D, r});
    if (r == 2) out.push_back({Family::G, 2});
    if (r == 4) out.push_back({Family::F, 4});
    if (r >= 6 && r <= 8) out.push_back({Family::E, r});
    return out;
}

// Invariants of a product given as a multiset of simple factors, by additivity.
class SumSource final : public InvariantSource {
   public:
    explicit SumSource(const std::vector<SimpleType>& factors) {
        for (auto f : factors) {
            n_ += f.rank;
            parts_.push_back(simple_invariants(f));
        }
    }
    int degree() const override { return n_; }
    int m(int i) const override { return sum([&](const InvariantSource& s) { return s.m(i); }); }
    int m_prime(int i) const override { return sum([&](const InvariantSource& s) { return s.m_prime(i); }); }
    int m_pair(int i, int j) const override { return sum([&](const InvariantSource& s) { return s.m_pair(i, j); }); }

   private:
    template <class F>
    int sum(F f) const {
        int total = 0;
        for (const auto& p : parts_) total += f(*p);
        return total;
    }
    int n_ = 0;
    std::vector<std::unique_ptr<InvariantSource>> parts_;
};

std::vector<SimpleType> sorted(std::vector<SimpleType> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("identify_by_cases examples") {
    const auto e8 = identify_by_cases(spectrum(simple("E8")), 8);
    CHECK(e8.text() == "E8");
    CHECK(e8.residual_ok);
    const auto b3g2 = identify_by_cases(spectrum(parse_type("B3 x G2")), 5);
    CHECK(b3g2.labels() == std::vector<std::string>{"BC3", "G2"});
    CHECK(b3g2.residual_ok);
    const auto a1 = identify_by_cases(spectrum(simple("A1")), 1);
    CHECK(a1.text() == "A1");
    CHECK(a1.residual_ok);
    CHECK(identify_by_cases(spectrum(parse_type("C4 x A1 x A1")), 6).text() == "A1 x A1 x BC4");
}

TEST_CASE("identify_by_cases input checks") {
    CHECK(error_of([] { identify_by_cases(spectrum(simple("A2")), 3); }) == ErrorCode::RankError);
    // A1 x A1 spectrum without the element -1 leaves a nonzero residual.
    Spectrum broken = spectrum(parse_type("A1 x A1"));
    broken.polys.erase(CycloPoly(std::map<int, int>{{2, 2}}));
    CHECK_FALSE(identify_by_cases(broken, 2).residual_ok);
    Spectrum trivial;
    trivial.n = 3;
    trivial.polys.insert(CycloPoly(std::map<int, int>{{1, 3}}));
    const auto none = identify_by_cases(trivial, 3);
    CHECK_FALSE(none.residual_ok);
    CHECK(none.text() == "(none)");
    // Phi_4 without Phi_2 drives the rank-1 stage negative.
    Spectrum odd;
    odd.n = 2;
    odd.polys.insert(CycloPoly(std::map<int, int>{{1, 2}}));
    odd.polys.insert(CycloPoly(std::map<int, int>{{4, 1}}));
    CHECK(error_of([&] { identify_by_cases(odd, 2); }) == ErrorCode::InconsistentSpectrum);
}

TEST_CASE("each stage recipe isolates its target among the types still present") {
    for (int m = 1; m <= 34; ++m) {
        const auto recipes = stage_recipes(m);
        REQUIRE(!recipes.empty());
        std::vector<SimpleType> targets;
        for (const auto& r : recipes) targets.push_back(r.target);
        CHECK(sorted(targets) == sorted(collapsed_of_rank(m)));

        for (std::size_t r = 0; r < recipes.size(); ++r) {
            const auto& recipe = recipes[r];
            CAPTURE(recipe.target.label());
            std::vector<SimpleType> live;
            for (int k = 1; k < m; ++k)
                for (auto t : collapsed_of_rank(k)) live.push_back(t);
            for (std::size_t later = r; later < recipes.size(); ++later) live.push_back(recipes[later].target);

            for (auto f : live) {
                CAPTURE(f.label());
                const auto src = simple_invariants(f);
                std::vector<SimpleType> earlier;
                for (const auto& [aux_type, formula] : recipe.aux) {
                    CAPTURE(aux_type.label());
                    if (std::find(earlier.begin(), earlier.end(), f) == earlier.end())
                        CHECK(formula.evaluate(*src) == (f == aux_type ? 1 : 0));
                    earlier.push_back(aux_type);
                }
                if (std::find(earlier.begin(), earlier.end(), f) == earlier.end())
                    CHECK(recipe.main.evaluate(*src) == (f == recipe.target ? 1 : 0));
            }
        }
    }
}

TEST_CASE("round trip over all types of rank <= 6 with monotone consumption") {
    std::size_t checked = 0;
    for (int r = 1; r <= 6; ++r)
        for (const auto& t : semisimple_types_of_rank(r, true)) {
            CAPTURE(t.canonical());
            const SpectrumInvariants inv(spectrum(t));
            std::vector<StageResult> stages;
            const auto report = identify_by_cases(inv, r, {}, &stages);
            CHECK(report.residual_ok);
            CHECK(report.factors == collapse_bc(t));

            ResidualInvariants residual(inv, {});
            const auto universe = index_universe(r);
            for (const auto& stage : stages) {
                for (const auto& [type, count] : stage.found) residual.subtract(type, count);
                for (int i : universe) {
                    REQUIRE(residual.m(i) >= 0);
                    REQUIRE(residual.m_prime(i) >= 0);
                    for (int j : universe)
                        if (i < j) REQUIRE(residual.m_pair(i, j) >= 0);
                }
            }
            ++checked;
        }
    CHECK(checked > 100);
}

TEST_CASE("round trip with E8 factors") {
    for (auto name : {"E8", "E8 x A1", "E8 x B2", "E8 x G2", "E8 x E8", "E8 x E7 x A2", "E8 x D9", "E8 x B10",
                      "E8 x B12", "E8 x A9", "E8 x C16", "E8 x D16", "E8 x F4 x A5"}) {
        const auto t = parse_type(name);
        CAPTURE(name);
        const SumSource src(t.factors());
        const auto report = identify_by_cases(src, t.total_rank());
        CHECK(report.residual_ok);
        CHECK(report.factors == collapse_bc(t));
    }
    const auto t = parse_type("E8 x A1");
    CHECK(identify_by_cases(spectrum(t), 9).factors == collapse_bc(t));
}

TEST_CASE("invariant-level round trips at high rank") {
    std::mt19937_64 rng(0x1de57);
    std::vector<SimpleType> pool;
    for (int r = 1; r <= 34; ++r) {
        pool.push_back({Family::A, r});
        if (r >= 2) pool.push_back({Family::B, r});
        if (r >= 3) pool.push_back({Family::C, r});
        if (r >= 4) pool.push_back({Family::D, r});
    }
    for (auto t : {SimpleType{Family::G, 2}, SimpleType{Family::F, 4}, SimpleType{Family::E, 6},
                   SimpleType{Family::E, 7}, SimpleType{Family::E, 8}})
        pool.push_back(t);

    for (int trial = 0; trial < 300; ++trial) {
        std::vector<SimpleType> factors;
        const int count = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < count; ++k) factors.push_back(pool[rng() % pool.size()]);
        const SemisimpleType t(factors);
        CAPTURE(t.canonical());
        const SumSource src(t.factors());
        const auto report = identify_by_cases(src, t.total_rank());
        CHECK(report.residual_ok);
        CHECK(report.factors == collapse_bc(t));
    }

    for (auto t : pool) {
        CAPTURE(t.label());
        for (int copies = 1; copies <= 2; ++copies) {
            std::vector<SimpleType> factors(copies, t);
            factors.push_back({Family::A, 1});
            const SumSource src(factors);
            const auto report = identify_by_cases(src, src.degree());
            CHECK(report.factors == collapse_bc(SemisimpleType(factors)));
        }
    }
}

TEST_CASE("identify_by_search examples") {
    SpectrumMemo memo;
    const auto b2 = identify_by_search(spectrum(simple("B2")), 2, memo);
    REQUIRE(b2.size() == 1);
    CHECK(b2.front() == std::vector<SimpleType>{{Family::B, 2}});
    CHECK(identify_by_search(spectrum(parse_type("A2 x A1")), 3, memo).size() == 1);
    Spectrum phi7;
    phi7.n = 2;
    phi7.polys.insert(CycloPoly(std::map<int, int>{{7, 1}}));
    CHECK(identify_by_search(phi7, 2, memo).empty());
    CHECK(error_of([&] { identify_by_search(spectrum(simple("A9")), 9, memo); }) == ErrorCode::SearchBoundExceeded);
    CHECK(identify_by_search(spectrum(simple("A9")), 9, memo, 9).size() == 1);
}

TEST_CASE("identify_by_search agrees with identify_by_cases through rank 6") {
    SpectrumMemo memo;
    for (int r = 1; r <= 6; ++r)
        for (const auto& t : semisimple_types_of_rank(r, false)) {
            CAPTURE(t.canonical());
            const auto s = spectrum(t);
            const auto found = identify_by_search(s, r, memo);
            REQUIRE(found.size() == 1);
            CHECK(sorted(found.front()) == identify_by_cases(s, r).factors);
        }
}

TEST_CASE("verify_uniqueness examples") {
    SpectrumMemo memo;
    const auto two = verify_uniqueness(2, memo, 1);
    CHECK(two.collisions.empty());
    CHECK(two.only_bc());
    const auto five = verify_uniqueness(5, memo, 2);
    CHECK(five.only_bc());
    CHECK(!five.collisions.empty());
    for (const auto& c : five.collisions) {
        CHECK(c.bc_relabeling);
        CHECK(collapse_bc(c.first) == collapse_bc(c.second));
    }
    const auto lines = five.lines();
    CHECK(std::is_sorted(lines.begin(), lines.end()));
    CHECK(std::find(lines.begin(), lines.end(), "COLLIDE B3 == C3") != lines.end());
    CHECK(std::find(lines.begin(), lines.end(), "COLLIDE A1xB3 == A1xC3") != lines.end());
}

TEST_CASE("B_n and C_n have equal spectra") {
    for (int n = 3; n <= 4; ++n)
        CHECK(oracle::brute_force_spectrum(SimpleType{Family::C, n}) ==
              oracle::brute_force_spectrum(SimpleType{Family::B, n}));
    for (int n = 3; n <= 8; ++n)
        CHECK(spectrum(SimpleType{Family::B, n}) == spectrum(SimpleType{Family::C, n}));
}

TEST_CASE("equal characteristic polynomials give equal cyclotomic decompositions in W(B3)") {
    const auto elements = oracle::closure(oracle::reflections(simple("B3")), 3);
    std::map<std::string, CycloPoly> by_poly;
    for (const auto& e : elements) {
        const IntPoly p = oracle::faddeev_char_poly(e);
        const CycloPoly f = cyclo_factor(p);
        auto [it, fresh] = by_poly.emplace(p.to_string(), f);
        CHECK(it->second == f);
    }
    CHECK(by_poly.size() == spectrum(simple("B3")).size());
}
