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

#ifndef WEYLSPEC_TORI_FQ_HPP
#define WEYLSPEC_TORI_FQ_HPP

#include <optional>
#include <string>
#include <vector>

#include "weylspec/bigint.hpp"
#include "weylspec/exact_poly.hpp"
#include "weylspec/root_data.hpp"
#include "weylspec/spectra.hpp"

namespace weylspec {

/// A conjugacy class of W. Classical labels carry the signed cycle type,
/// e.g. "A3[2,1,1]", "B2[1|1]", "D4[2,2|]+"; exceptional labels are an
/// ordinal and the element order, e.g. "E6#7/o4".
struct WeylClass {
    std::string label;
    CycloPoly char_poly;
    std::optional<BigInt> size;
};

/// Classes of a simple type. Classical types come from cycle-type data,
/// G2 through E7 from exhaustive enumeration. E8 throws DataUnavailable.
std::vector<WeylClass> weyl_classes(SimpleType t);

/// Classes of a product: tuples of factor classes, labels joined by " x ".
std::vector<WeylClass> weyl_classes(const SemisimpleType& t);

struct PrimePowerCheck {
    bool prime_power = false;
    /// False when q has no prime factor below 10^6 and exceeds 10^12, so
    /// the trial division could not settle the question.
    bool decided = true;
};

/// Throws InvalidArgument for q < 2.
PrimePowerCheck check_prime_power(const BigInt& q);

struct TorusEntry {
    std::string label;
    CycloPoly char_poly;
    BigInt order;
};

struct TorusReport {
    BigInt q;
    bool q_unverified = false;
    std::vector<TorusEntry> entries;
};

/// One entry per class of W(t), order = characteristic polynomial at q.
/// Throws InvalidArgument if q is not a prime power.
TorusReport torus_orders(const SemisimpleType& t, const BigInt& q);

struct ShareVerdict {
    bool shared = false;
    /// Smallest polynomial in the symmetric difference of the spectra.
    std::optional<CycloPoly> witness;
    std::string justification;
};

/// Whether the split groups of types t1 and t2 have the same maximal tori
/// up to GL_n(Q)-conjugacy of the Weyl elements, i.e. equal spectra.
ShareVerdict share_tori(const SemisimpleType& t1, const SemisimpleType& t2, const SpectrumOptions& options = {});

}  // namespace weylspec

#endif
