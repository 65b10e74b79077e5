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

#ifndef WEYLSPEC_SPECTRA_HPP
#define WEYLSPEC_SPECTRA_HPP

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "weylspec/exact_poly.hpp"
#include "weylspec/root_data.hpp"

namespace weylspec {

enum class Provenance { combinatorial, enumerated, bundled, product, cached };

std::string_view to_string(Provenance p);

/// The set of characteristic polynomials of a Weyl group, all of degree n.
struct Spectrum {
    int n = 0;
    std::set<CycloPoly> polys;
    Provenance provenance = Provenance::product;

    bool contains(const CycloPoly& p) const { return polys.contains(p); }
    std::size_t size() const noexcept { return polys.size(); }
    bool operator==(const Spectrum& other) const { return n == other.n && polys == other.polys; }
};

/// Classical spectra from signed cycle types. spectrum_A: prod (x^l - 1) / (x - 1)
/// over partitions l of n + 1. spectrum_BC: prod (x^l - 1) prod (x^u + 1)
/// over pairs |l| + |u| = n. spectrum_D: as BC with an even number of parts in u.
Spectrum spectrum_A(int n);
Spectrum spectrum_BC(int n);
Spectrum spectrum_D(int n);

enum class ExceptionalStrategy { enumerate, bundled };
enum class E8Mode { bundled, enumerate, forbid };

struct SpectrumOptions {
    E8Mode e8_mode = E8Mode::bundled;
    /// Required for exhaustive E8 enumeration.
    bool allow_long_running = false;
    unsigned threads = 0;
    /// No on-disk caching when empty.
    std::optional<std::filesystem::path> cache_dir;
};

/// G2, F4, E6, E7, E8. `bundled` loads and validates shipped data; E8
/// enumeration needs `allow_long_running`.
Spectrum spectrum_exceptional(SimpleType t, ExceptionalStrategy strategy, const SpectrumOptions& options = {});

/// Classical formula or, for exceptional types, enumeration (E8 per
/// options.e8_mode).
Spectrum spectrum(SimpleType t, const SpectrumOptions& options = {});

/// Pointwise products, factor maps added.
Spectrum spectrum_product(const Spectrum& a, const Spectrum& b);

/// Product over the factors of t. Reads and writes the cache when
/// options.cache_dir is set.
Spectrum spectrum(const SemisimpleType& t, const SpectrumOptions& options = {});

/// Spectrum file: header `weylspec v1 <type> n=<rank>`, then one canonical
/// CycloPoly per line in lexicographic order.
std::string format_spectrum_file(const Spectrum& s, std::string_view type_key);

struct SpectrumFile {
    std::string type_key;
    Spectrum spectrum;
};

/// Strict parser; throws DataCorrupt on any deviation from the format.
SpectrumFile parse_spectrum_file(std::string_view text);

/// Shipped data text for an exceptional type (same file format).
std::string_view bundled_spectrum_text(SimpleType t);

/// Throws DataCorrupt unless `s` passes the bundled-data gates for t:
/// every entry of degree rank(t), identity present, ch* equal to both the
/// Springer set and the tabulated set, and for E8 m_30 = m_24 = m_20 = m_18 = 1.
void validate_exceptional_spectrum(SimpleType t, const Spectrum& s);

}  // namespace weylspec

#endif
