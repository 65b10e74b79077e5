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

#include <random>

#include "oracle.hpp"
#include "test_util.hpp"
#include "weylspec/exact_poly.hpp"
#include "weylspec/weyl_enum.hpp"

using namespace weylspec;
using testutil::error_of;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(30) == IntPoly{1, 1, 0, -1, -1, -1, 0, 1, 1});
    CHECK(cyclotomic(105).coeff(7) == -2);
}

TEST_CASE("cyclotomic degree is the totient") {
    for (int d = 1; d <= 64; ++d) CHECK(cyclotomic(d).degree() == static_cast<int>(totient(d)));
}

TEST_CASE("product of cyclotomics over divisors is x^n - 1") {
    for (int n = 1; n <= 40; ++n) {
        IntPoly p{1};
        for (int d : divisors(n)) p = p * cyclotomic(d);
        CHECK(p == IntPoly::monomial(n) - IntPoly{1});
    }
}

TEST_CASE("char_poly examples") {
    CHECK(char_poly(IntMatrix::identity(3)) == IntPoly{-1, 3, -3, 1});
    const auto s = simple_reflections(testutil::simple("A2"));
    CHECK(char_poly(s[0] * s[1]) == IntPoly{1, 1, 1});
    CHECK(char_poly(IntMatrix{{-1}}) == IntPoly{1, 1});
    CHECK(char_poly(IntMatrix{{0, -1}, {1, 0}}) == IntPoly{1, 0, 1});
}

TEST_CASE("cyclo_factor examples") {
    CHECK(cyclo_factor(IntPoly{-1, 0, 1}).text() == "1:1,2:1");
    CHECK(cyclo_factor(IntPoly{1, 1, 1, 1, 1}) == CycloPoly(std::map<int, int>{{5, 1}}));
    CHECK(error_of([] { cyclo_factor(IntPoly{-2, 0, 1}); }) == ErrorCode::NotCyclotomicProduct);
    CHECK(error_of([] { cyclo_factor(IntPoly{1, 3, 1}); }) == ErrorCode::NotCyclotomicProduct);
    CHECK(error_of([] { cyclo_factor(IntPoly{1, 0, 3, 0, 1}); }) == ErrorCode::NotCyclotomicProduct);
    CHECK(cyclo_factor(IntPoly{1, 1, 2, 1, 1}).text() == "3:1,4:1");
    CHECK(cyclo_factor(IntPoly{1, 1, 1, 1, 1, 1, 1}).text() == "7:1");
}

TEST_CASE("eval_poly") {
    CHECK(eval_poly(IntPoly{-1, 1}, 5) == 4);
    CHECK(eval_poly(IntPoly{1, 0, 1}, 3) == 10);
    // Phi_30(x) = x^8 + x^7 - x^5 - x^4 - x^3 + x + 1, so Phi_30(2) = 256 + 128 - 32 - 16 - 8 + 2 + 1.
    CHECK(eval_poly(cyclotomic(30), 2) == 331);
    // Phi_15(x) = Phi_30(-x) = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1.
    CHECK(eval_poly(cyclotomic(15), 2) == 151);
    CHECK(eval_poly(IntPoly::monomial(100), 2) == (BigInt(1) << 100));
}

TEST_CASE("CycloPoly text round trip and expansion") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 200; ++trial) {
        std::map<int, int> f;
        const int k = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < k; ++j) f[1 + static_cast<int>(rng() % 36)] += 1 + static_cast<int>(rng() % 3);
        const CycloPoly c(f);
        CHECK(CycloPoly::parse(c.text()) == c);
        CHECK(cyclo_factor(c.expand()) == c);
        CHECK(c.expand().degree() == c.degree());
    }
}

TEST_CASE("CycloPoly parse rejects non-canonical text") {
    for (const char* bad : {"1", "1:0", "2:1,1:1", "1:1,1:1", "0:1", "1:1,", "a:1", "1:-1", " 1:1", "1:1 "})
        CHECK_MESSAGE(error_of([&] { CycloPoly::parse(bad); }).has_value(), std::string(bad));
    CHECK(CycloPoly::parse("").empty());
}

TEST_CASE("element order of a CycloPoly") {
    CHECK(CycloPoly::parse("1:2").element_order() == 1);
    CHECK(CycloPoly::parse("2:1,3:1").element_order() == 6);
    CHECK(CycloPoly::parse("4:1,6:2").element_order() == 12);
}

TEST_CASE("x^a - 1 and x^a + 1 factorizations") {
    for (int a = 1; a <= 30; ++a) {
        CHECK(cyclo_x_pow_minus_one(a).expand() == IntPoly::monomial(a) - IntPoly{1});
        CHECK(cyclo_x_pow_plus_one(a).expand() == IntPoly::monomial(a) + IntPoly{1});
    }
}

TEST_CASE("char_poly is multiplicative on block-diagonal sums") {
    const auto a = simple_reflections(testutil::simple("G2"));
    const auto b = simple_reflections(testutil::simple("B3"));
    const IntMatrix ma = a[0] * a[1];
    const IntMatrix mb = b[0] * b[2] * b[1];
    CHECK(char_poly(block_diagonal(ma, mb)) == char_poly(ma) * char_poly(mb));
    CHECK(char_poly(block_diagonal(mb, IntMatrix::identity(2))) == char_poly(mb) * IntPoly{1, -2, 1});
}

TEST_CASE("Berkowitz agrees with Faddeev-LeVerrier on every element of small Weyl groups") {
    for (auto name : {"A3", "B3", "C3", "G2", "A1 x A2", "D4", "F4"}) {
        const auto t = parse_type(name);
        CAPTURE(name);
        for (const auto& m : oracle::closure(oracle::reflections(t), t.total_rank())) {
            IntMatrix im(t.total_rank());
            for (int r = 0; r < t.total_rank(); ++r)
                for (int c = 0; c < t.total_rank(); ++c) im(r, c) = m.at(r, c);
            const IntPoly p = char_poly(im);
            REQUIRE(p == oracle::faddeev_char_poly(m));
            CHECK(cyclo_factor(p).degree() == t.total_rank());
        }
    }
}

TEST_CASE("power-trace reconstruction matches the determinant formula") {
    const WeylRootAction action(testutil::simple("F4"));
    std::size_t checked = 0;
    for (std::size_t b = 0; b < action.block_count(); ++b)
        action.visit_block(b, [&](const std::uint16_t* images, int det) {
            const IntMatrix m = action.matrix(std::span(images, 4));
            std::vector<std::int64_t> traces;
            IntMatrix power = m;
            for (int k = 1; k <= 4; ++k) {
                std::int64_t tr = 0;
                for (int i = 0; i < 4; ++i) tr += power(i, i);
                traces.push_back(tr);
                power = power * m;
            }
            CHECK(char_poly_from_power_traces(traces) == char_poly(m));
            CHECK(char_poly(m).coeff(0) == det);
            ++checked;
        });
    CHECK(checked == 1152);
}
