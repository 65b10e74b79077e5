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

#include "weylspec/spectra.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "weylspec/cache.hpp"
#include "weylspec/error.hpp"
#include "weylspec/invariants.hpp"
#include "weylspec/partitions.hpp"
#include "weylspec/weyl_enum.hpp"

namespace weylspec {

namespace detail {
extern const std::string_view kBundledG2;
extern const std::string_view kBundledF4;
extern const std::string_view kBundledE6;
extern const std::string_view kBundledE7;
extern const std::string_view kBundledE8;
}  // namespace detail

std::string_view bundled_spectrum_text(SimpleType t) {
    switch (t.family) {
        case Family::G: return detail::kBundledG2;
        case Family::F: return detail::kBundledF4;
        case Family::E:
            if (t.rank == 6) return detail::kBundledE6;
            if (t.rank == 7) return detail::kBundledE7;
            return detail::kBundledE8;
        default: throw Error(ErrorCode::DataUnavailable, "no bundled data for " + t.label());
    }
}

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::combinatorial: return "combinatorial";
        case Provenance::enumerated: return "enumerated";
        case Provenance::bundled: return "bundled";
        case Provenance::product: return "product";
        case Provenance::cached: return "cached";
    }
    return "unknown";
}

namespace {

// Distinct products of (x^l - 1) over partitions l of k.
std::set<CycloPoly> minus_products(int k) {
    std::set<CycloPoly> out;
    for_each_partition(k, [&](const Partition& parts) {
        CycloPoly p;
        for (int l : parts) p *= cyclo_x_pow_minus_one(l);
        out.insert(std::move(p));
    });
    return out;
}

// Distinct products of (x^u + 1) over partitions u of k, split by the
// parity of the number of parts.
std::pair<std::set<CycloPoly>, std::set<CycloPoly>> plus_products(int k) {
    std::set<CycloPoly> even;
    std::set<CycloPoly> odd;
    for_each_partition(k, [&](const Partition& parts) {
        CycloPoly p;
        for (int u : parts) p *= cyclo_x_pow_plus_one(u);
        (parts.size() % 2 == 0 ? even : odd).insert(std::move(p));
    });
    return {std::move(even), std::move(odd)};
}

void insert_products(std::set<CycloPoly>& out, const std::set<CycloPoly>& a, const std::set<CycloPoly>& b) {
    for (const auto& x : a)
        for (const auto& y : b) out.insert(x * y);
}

Spectrum signed_cycle_spectrum(int n, bool even_negative_only) {
    Spectrum s;
    s.n = n;
    s.provenance = Provenance::combinatorial;
    for (int k = 0; k <= n; ++k) {
        const auto minus = minus_products(k);
        auto [even, odd] = plus_products(n - k);
        insert_products(s.polys, minus, even);
        if (!even_negative_only) insert_products(s.polys, minus, odd);
    }
    return s;
}

void require_rank(int n, int lo, const char* family) {
    if (n < lo) throw Error(ErrorCode::RankError, std::string(family) + " needs rank >= " + std::to_string(lo));
}

Spectrum enumerate_exceptional(SimpleType t, const SpectrumOptions& options) {
    if (t.family == Family::E && t.rank == 8 && !options.allow_long_running)
        throw Error(ErrorCode::StrategyUnavailable,
                    "E8 enumeration visits 696729600 elements; pass --allow-long-running to enable it");
    WeylRootAction action(t);
    Spectrum s;
    s.n = t.rank;
    s.polys = enumerate_char_polys(action, options.threads);
    s.provenance = Provenance::enumerated;
    return s;
}

Spectrum load_bundled(SimpleType t) {
    SpectrumFile file = parse_spectrum_file(bundled_spectrum_text(t));
    if (file.type_key != t.label())
        throw Error(ErrorCode::DataCorrupt, "bundled data for " + t.label() + " is keyed " + file.type_key);
    validate_exceptional_spectrum(t, file.spectrum);
    file.spectrum.provenance = Provenance::bundled;
    return std::move(file.spectrum);
}

}  // namespace

Spectrum spectrum_A(int n) {
    require_rank(n, 1, "A");
    Spectrum s;
    s.n = n;
    s.provenance = Provenance::combinatorial;
    for_each_partition(n + 1, [&](const Partition& parts) {
        CycloPoly p;
        for (int l : parts) p *= cyclo_x_pow_minus_one(l);
        auto factors = p.factors();
        if (--factors[1] == 0) factors.erase(1);
        s.polys.insert(CycloPoly(std::move(factors)));
    });
    return s;
}

Spectrum spectrum_BC(int n) {
    require_rank(n, 2, "B/C");
    return signed_cycle_spectrum(n, false);
}

Spectrum spectrum_D(int n) {
    require_rank(n, 4, "D");
    return signed_cycle_spectrum(n, true);
}

Spectrum spectrum_exceptional(SimpleType t, ExceptionalStrategy strategy, const SpectrumOptions& options) {
    if (!t.is_exceptional()) throw Error(ErrorCode::InvalidArgument, t.label() + " is not an exceptional type");
    return strategy == ExceptionalStrategy::bundled ? load_bundled(t) : enumerate_exceptional(t, options);
}

Spectrum spectrum(SimpleType t, const SpectrumOptions& options) {
    switch (t.family) {
        case Family::A: return spectrum_A(t.rank);
        case Family::B:
        case Family::C: return spectrum_BC(t.rank);
        case Family::D: return spectrum_D(t.rank);
        default: break;
    }
    if (t.family == Family::E && t.rank == 8) {
        switch (options.e8_mode) {
            case E8Mode::forbid: throw Error(ErrorCode::StrategyUnavailable, "E8 is excluded by --e8-mode forbid");
            case E8Mode::bundled: return spectrum_exceptional(t, ExceptionalStrategy::bundled, options);
            case E8Mode::enumerate: break;
        }
    }
    return spectrum_exceptional(t, ExceptionalStrategy::enumerate, options);
}

Spectrum spectrum_product(const Spectrum& a, const Spectrum& b) {
    Spectrum s;
    s.n = a.n + b.n;
    s.provenance = Provenance::product;
    insert_products(s.polys, a.polys, b.polys);
    return s;
}

Spectrum spectrum(const SemisimpleType& t, const SpectrumOptions& options) {
    for (const SimpleType& f : t.factors())
        if (f.family == Family::E && f.rank == 8 && options.e8_mode == E8Mode::forbid)
            throw Error(ErrorCode::StrategyUnavailable, "E8 is excluded by --e8-mode forbid");

    std::optional<SpectrumCache> cache;
    if (options.cache_dir) cache.emplace(*options.cache_dir);
    const std::string key = t.canonical();
    if (cache && !key.empty()) {
        if (auto hit = cache->load(key)) return std::move(*hit);
    }

    std::map<SimpleType, Spectrum> memo;
    auto factor_spectrum = [&](SimpleType f) -> const Spectrum& {
        if (auto it = memo.find(f); it != memo.end()) return it->second;
        std::optional<Spectrum> s;
        const bool bundled_e8 = f.family == Family::E && f.rank == 8 && options.e8_mode != E8Mode::enumerate;
        const bool cacheable = cache && f.is_exceptional() && !bundled_e8;
        if (cacheable) s = cache->load(f.label());
        if (!s) {
            s = spectrum(f, options);
            if (cacheable) cache->store(f.label(), *s);
        }
        return memo.emplace(f, std::move(*s)).first->second;
    };

    Spectrum result;
    result.polys.insert(CycloPoly{});
    for (const SimpleType& f : t.factors()) result = spectrum_product(result, factor_spectrum(f));
    if (t.factors().size() == 1) result.provenance = memo.begin()->second.provenance;

    if (cache && !key.empty() && (t.factors().size() > 1 || t.factors().front().is_exceptional()))
        cache->store(key, result);
    return result;
}

std::string format_spectrum_file(const Spectrum& s, std::string_view type_key) {
    std::vector<std::string> lines;
    lines.reserve(s.polys.size());
    for (const auto& p : s.polys) lines.push_back(p.text());
    std::sort(lines.begin(), lines.end());
    std::string out = "weylspec v1 " + std::string(type_key) + " n=" + std::to_string(s.n) + "\n";
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

SpectrumFile parse_spectrum_file(std::string_view text) {
    auto corrupt = [](const std::string& what) { return Error(ErrorCode::DataCorrupt, what); };
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos) throw corrupt("missing trailing newline");
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    if (lines.empty()) throw corrupt("empty spectrum file");

    std::string_view header = lines.front();
    constexpr std::string_view kMagic = "weylspec v1 ";
    if (!header.starts_with(kMagic)) throw corrupt("bad header");
    header.remove_prefix(kMagic.size());
    const auto space = header.find(' ');
    if (space == std::string_view::npos || space == 0) throw corrupt("bad header");
    SpectrumFile file;
    file.type_key = std::string(header.substr(0, space));
    std::string_view rank = header.substr(space + 1);
    if (!rank.starts_with("n=")) throw corrupt("bad header rank");
    rank.remove_prefix(2);
    int n = -1;
    const auto [ptr, ec] = std::from_chars(rank.data(), rank.data() + rank.size(), n);
    if (ec != std::errc{} || ptr != rank.data() + rank.size() || n < 0) throw corrupt("bad header rank");
    file.spectrum.n = n;

    std::string_view previous;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (i > 1 && !(previous < lines[i])) throw corrupt("entries not strictly sorted at line " + std::to_string(i + 1));
        previous = lines[i];
        CycloPoly p = CycloPoly::parse(lines[i]);
        if (p.degree() != n)
            throw corrupt("line " + std::to_string(i + 1) + " has degree " + std::to_string(p.degree()));
        file.spectrum.polys.insert(std::move(p));
    }
    if (file.spectrum.polys.empty()) throw corrupt("spectrum file has no entries");
    return file;
}

void validate_exceptional_spectrum(SimpleType t, const Spectrum& s) {
    const std::string name = t.label();
    auto fail = [&](const std::string& what) { throw Error(ErrorCode::DataCorrupt, name + ": " + what); };
    if (s.n != t.rank) fail("rank mismatch");
    for (const auto& p : s.polys)
        if (p.degree() != t.rank) fail("entry " + p.text() + " has wrong degree");
    if (!s.contains(CycloPoly(std::map<int, int>{{1, t.rank}}))) fail("identity polynomial missing");
    const auto star = ch_star(s);
    if (star != springer_ch_star(t)) fail("ch* differs from the divisors of the degrees");
    if (star != tabulated_ch_star(t)) fail("ch* differs from the tabulated set");
    if (t.family == Family::E && t.rank == 8) {
        for (int d : {30, 24, 20, 18})
            if (m(s, d) != 1) fail("m_" + std::to_string(d) + " != 1");
    }
}

}  // namespace weylspec
