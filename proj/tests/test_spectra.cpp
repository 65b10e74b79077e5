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

#include <filesystem>
#include <fstream>
#include <random>

#include "oracle.hpp"
#include "test_util.hpp"
#include "weylspec/cache.hpp"
#include "weylspec/invariants.hpp"
#include "weylspec/spectra.hpp"
#include "weylspec/weyl_enum.hpp"

using namespace weylspec;
using testutil::error_of;
using testutil::simple;

namespace {

CycloPoly cp(std::map<int, int> f) { return CycloPoly(std::move(f)); }

std::set<CycloPoly> polys(std::initializer_list<std::map<int, int>> list) {
    std::set<CycloPoly> out;
    for (const auto& f : list) out.insert(CycloPoly(f));
    return out;
}

std::set<int> range_set(int lo, int hi) {
    std::set<int> out;
    for (int i = lo; i <= hi; ++i) out.insert(i);
    return out;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("weylspec-test-" + std::to_string(std::random_device{}()) + "-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("spectrum_A examples") {
    CHECK(spectrum_A(1).polys == polys({{{1, 1}}, {{2, 1}}}));
    CHECK(spectrum_A(2).polys == polys({{{1, 2}}, {{1, 1}, {2, 1}}, {{3, 1}}}));
    CHECK(ch_star(spectrum_A(4)) == range_set(1, 5));
    CHECK(spectrum_A(3).provenance == Provenance::combinatorial);
}

TEST_CASE("spectrum_BC examples") {
    const auto b2 = spectrum_BC(2);
    CHECK(b2.polys == polys({{{1, 2}}, {{1, 1}, {2, 1}}, {{2, 2}}, {{4, 1}}}));
    CHECK(ch_star(spectrum_BC(3)) == std::set<int>{1, 2, 3, 4, 6});
    for (int n = 2; n <= 20; ++n) CHECK(spectrum_BC(n).contains(cyclo_x_pow_plus_one(n)));
}

TEST_CASE("spectrum_D examples") {
    const auto d4 = spectrum_D(4);
    const CycloPoly witness = cp({{2, 2}, {6, 1}});
    CHECK(d4.contains(witness));
    int with_phi6 = 0;
    for (const auto& p : d4.polys) with_phi6 += p.multiplicity(6) > 0;
    CHECK(with_phi6 == 1);
    CHECK(ch_star(spectrum_D(5)) == std::set<int>{1, 2, 3, 4, 5, 6, 8});
}

TEST_CASE("spectrum_exceptional examples") {
    const auto g2 = spectrum_exceptional(simple("G2"), ExceptionalStrategy::enumerate);
    CHECK(g2.polys == polys({{{1, 2}}, {{1, 1}, {2, 1}}, {{2, 2}}, {{3, 1}}, {{6, 1}}}));
    CHECK(g2.provenance == Provenance::enumerated);
    CHECK(ch_star(spectrum_exceptional(simple("E6"), ExceptionalStrategy::bundled)) ==
          std::set<int>{1, 2, 3, 4, 5, 6, 8, 9, 12});
    EnumerationStats stats;
    enumerate_char_polys(WeylRootAction(simple("F4")), 1, &stats);
    CHECK(stats.elements == 1152);
}

TEST_CASE("semisimple spectrum examples") {
    CHECK(spectrum(parse_type("A1 x A1")).polys == polys({{{1, 2}}, {{1, 1}, {2, 1}}, {{2, 2}}}));
    for (auto t : testutil::simple_types_up_to(7)) {
        CAPTURE(t.label());
        const auto via_semisimple = spectrum(SemisimpleType({t}));
        switch (t.family) {
            case Family::A: CHECK(via_semisimple == spectrum_A(t.rank)); break;
            case Family::B:
            case Family::C: CHECK(via_semisimple == spectrum_BC(t.rank)); break;
            case Family::D: CHECK(via_semisimple == spectrum_D(t.rank)); break;
            default: CHECK(via_semisimple == spectrum_exceptional(t, ExceptionalStrategy::bundled));
        }
    }
    const auto b2g2 = spectrum(parse_type("B2 x G2"));
    CHECK(b2g2.polys == oracle::brute_force_spectrum(parse_type("B2 x G2")));
    CHECK(b2g2.provenance == Provenance::product);
}

TEST_CASE("spectra match brute-force matrix enumeration through E6") {
    for (auto t : testutil::simple_types_up_to(8)) {
        if (weyl_order(t) > 60000) continue;
        CAPTURE(t.label());
        CHECK(spectrum(t).polys == oracle::brute_force_spectrum(t));
    }
    CHECK(spectrum_exceptional(simple("E6"), ExceptionalStrategy::enumerate).polys ==
          oracle::brute_force_spectrum(simple("E6")));
}

TEST_CASE("semisimple spectra match brute force on small products") {
    for (auto name : {"A1 x A1", "A1 x A2", "A2 x B2", "A1 x A1 x A1", "G2 x A1", "B3 x A1", "A2 x A2"}) {
        CAPTURE(name);
        CHECK(spectrum(parse_type(name)).polys == oracle::brute_force_spectrum(parse_type(name)));
    }
}

TEST_CASE("Springer consistency of ch*") {
    for (auto t : testutil::simple_types_up_to(16)) {
        CAPTURE(t.label());
        const auto s = spectrum(t);
        CHECK(ch_star(s) == springer_ch_star(t));
        CHECK(ch_star(s) == tabulated_ch_star(t));
    }
    CHECK(ch_star(spectrum(simple("G2"))) == std::set<int>{1, 2, 3, 6});
    CHECK(ch_star(spectrum(simple("F4"))) == std::set<int>{1, 2, 3, 4, 6, 8, 12});
    auto e7 = range_set(1, 10);
    e7.insert({12, 14, 18});
    CHECK(ch_star(spectrum(simple("E7"))) == e7);
    auto e8 = range_set(1, 10);
    e8.insert({12, 14, 15, 18, 20, 24, 30});
    CHECK(ch_star(spectrum(simple("E8"))) == e8);
    for (int n = 4; n <= 12; ++n) {
        std::set<int> d = range_set(1, n);
        for (int j = 1; j < n; ++j) d.insert(2 * j);
        CHECK(ch_star(spectrum_D(n)) == d);
    }
}

TEST_CASE("member degrees, identity and -1") {
    for (auto t : testutil::simple_types_up_to(10)) {
        CAPTURE(t.label());
        const auto s = spectrum(t);
        CHECK(s.n == t.rank);
        for (const auto& p : s.polys) CHECK(p.degree() == t.rank);
        CHECK(s.contains(cp({{1, t.rank}})));
        const bool minus_one = t.family == Family::B || t.family == Family::C || t.family == Family::G ||
                               t.family == Family::F || (t.family == Family::D && t.rank % 2 == 0) ||
                               (t.family == Family::E && t.rank != 6) || (t.family == Family::A && t.rank == 1);
        CHECK(s.contains(cp({{2, t.rank}})) == minus_one);
    }
}

TEST_CASE("product law") {
    const auto a = spectrum(simple("B3"));
    const auto b = spectrum(simple("G2"));
    const auto prod = spectrum(parse_type("B3 x G2"));
    std::set<CycloPoly> expected;
    for (const auto& p : a.polys)
        for (const auto& q : b.polys) expected.insert(p * q);
    CHECK(prod.polys == expected);
    CHECK(prod.n == 5);
    CHECK(spectrum_product(a, b) == prod);
}

TEST_CASE("bundled data equals fresh enumeration for G2 through E7") {
    for (auto name : {"G2", "F4", "E6", "E7"}) {
        CAPTURE(name);
        const auto t = simple(name);
        const auto bundled = spectrum_exceptional(t, ExceptionalStrategy::bundled);
        CHECK(bundled.provenance == Provenance::bundled);
        CHECK(bundled == spectrum_exceptional(t, ExceptionalStrategy::enumerate));
    }
    CHECK(spectrum(simple("E6")).size() == 25);
    CHECK(spectrum(simple("E7")).size() == 54);
    CHECK(spectrum(simple("F4")).size() == 17);
}

TEST_CASE("E8 bundled data validates") {
    const auto e8 = spectrum(simple("E8"));
    CHECK(e8.provenance == Provenance::bundled);
    CHECK(e8.size() == 106);
    CHECK_NOTHROW(validate_exceptional_spectrum(simple("E8"), e8));
    CHECK(e8.contains(cp({{30, 1}})));
    CHECK(e8.contains(cp({{24, 1}})));
    CHECK(e8.contains(cp({{20, 1}})));
    CHECK(e8.contains(cp({{2, 8}})));
}

TEST_CASE("corrupted exceptional data is rejected") {
    const auto e8 = spectrum(simple("E8"));
    const auto t = simple("E8");

    Spectrum missing_coxeter = e8;
    missing_coxeter.polys.erase(cp({{30, 1}}));
    CHECK(error_of([&] { validate_exceptional_spectrum(t, missing_coxeter); }) == ErrorCode::DataCorrupt);

    Spectrum extra_factor = e8;
    extra_factor.polys.insert(cp({{16, 1}}));
    CHECK(error_of([&] { validate_exceptional_spectrum(t, extra_factor); }) == ErrorCode::DataCorrupt);

    Spectrum no_identity = e8;
    no_identity.polys.erase(cp({{1, 8}}));
    CHECK(error_of([&] { validate_exceptional_spectrum(t, no_identity); }) == ErrorCode::DataCorrupt);

    Spectrum wrong_degree = spectrum(simple("F4"));
    wrong_degree.polys.insert(cp({{1, 5}}));
    CHECK(error_of([&] { validate_exceptional_spectrum(simple("F4"), wrong_degree); }) == ErrorCode::DataCorrupt);

    const std::string text(bundled_spectrum_text(t));
    CHECK(error_of([&] { parse_spectrum_file(text.substr(0, text.size() - 1)); }) == ErrorCode::DataCorrupt);
    std::string swapped = text;
    const auto first = swapped.find('\n') + 1;
    const auto second = swapped.find('\n', first) + 1;
    const auto third = swapped.find('\n', second) + 1;
    swapped = swapped.substr(0, first) + swapped.substr(second, third - second) + swapped.substr(first, second - first) +
              swapped.substr(third);
    CHECK(error_of([&] { parse_spectrum_file(swapped); }) == ErrorCode::DataCorrupt);
    CHECK(error_of([&] { parse_spectrum_file("weylspec v2 E8 n=8\n1:8\n"); }) == ErrorCode::DataCorrupt);
    CHECK(error_of([&] { parse_spectrum_file("weylspec v1 E8 n=8\n1:7\n"); }) == ErrorCode::DataCorrupt);
    CHECK(error_of([&] { parse_spectrum_file("weylspec v1 E8 n=8\n1:8\n1:8\n"); }) == ErrorCode::DataCorrupt);
    CHECK(error_of([&] { parse_spectrum_file("weylspec v1 E8 n=8\n1:8\nfoo\n"); }) == ErrorCode::DataCorrupt);
    CHECK(error_of([&] { parse_spectrum_file("weylspec v1 E8 n=8\n"); }) == ErrorCode::DataCorrupt);
}

TEST_CASE("E8 strategy gating") {
    CHECK(error_of([] { spectrum_exceptional(simple("E8"), ExceptionalStrategy::enumerate); }) ==
          ErrorCode::StrategyUnavailable);
    SpectrumOptions forbid;
    forbid.e8_mode = E8Mode::forbid;
    CHECK(error_of([&] { spectrum(parse_type("E8 x A1"), forbid); }) == ErrorCode::StrategyUnavailable);
    CHECK_NOTHROW(spectrum(parse_type("E7 x A1"), forbid));
}

TEST_CASE("spectrum file format is bit-exact") {
    const auto s = spectrum_BC(2);
    const std::string text = format_spectrum_file(s, "B2");
    CHECK(text == "weylspec v1 B2 n=2\n1:1,2:1\n1:2\n2:2\n4:1\n");
    const auto parsed = parse_spectrum_file(text);
    CHECK(parsed.type_key == "B2");
    CHECK(parsed.spectrum == s);
    for (auto name : {"G2", "F4", "E6", "E7", "E8"}) {
        const std::string bundled(bundled_spectrum_text(simple(name)));
        CHECK(format_spectrum_file(parse_spectrum_file(bundled).spectrum, name) == bundled);
    }
}

TEST_CASE("spectrum cache round trip") {
    TempDir dir;
    SpectrumOptions options;
    options.cache_dir = dir.path;
    const SpectrumCache cache(dir.path);

    const auto fresh = spectrum(parse_type("G2 x A2"), options);
    CHECK(fresh.provenance == Provenance::product);
    REQUIRE(std::filesystem::exists(cache.path_for("A2xG2")));
    CHECK(std::filesystem::exists(cache.path_for("G2")));
    const auto cached = spectrum(parse_type("A2 x G2"), options);
    CHECK(cached.provenance == Provenance::cached);
    CHECK(cached == fresh);

    const auto entries = cache.entries();
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].key == "A2xG2");
    CHECK(entries[1].key == "G2");
    std::ifstream in(entries[1].path, std::ios::binary);
    const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(entries[1].hash == fnv1a_hex(body));
    CHECK(body == bundled_spectrum_text(simple("G2")));

    {
        std::ofstream out(cache.path_for("A2xG2"), std::ios::binary | std::ios::trunc);
        out << "garbage\n";
    }
    CHECK_FALSE(cache.load("A2xG2").has_value());
    CHECK(spectrum(parse_type("A2 x G2"), options) == fresh);
    CHECK(cache.load("A2xG2").has_value());

    cache.store("B2", spectrum_BC(3));
    CHECK_FALSE(cache.load("B2").has_value());
    CHECK_FALSE(cache.load("A1").has_value());

    CHECK(cache.clear() == 3);
    CHECK(cache.entries().empty());
}

TEST_CASE("FNV-1a reference values") {
    CHECK(fnv1a_64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a_64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("enumeration output is independent of thread count") {
    for (auto name : {"F4", "E6"}) {
        const WeylRootAction action(simple(name));
        EnumerationStats one, three;
        const auto a = enumerate_char_polys(action, 1, &one);
        const auto b = enumerate_char_polys(action, 3, &three);
        CHECK(a == b);
        CHECK(one.elements == three.elements);
        CHECK(one.elements == weyl_order(simple(name)));
    }
}
