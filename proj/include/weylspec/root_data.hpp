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

#ifndef WEYLSPEC_ROOT_DATA_HPP
#define WEYLSPEC_ROOT_DATA_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weylspec/bigint.hpp"

namespace weylspec {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Dynkin type. Instances built through `make_simple` or
/// `parse_type` are canonical: ranks are within family bounds and the
/// low-rank coincidences (B1, C1, C2, D2, D3, ...) have been rewritten.
struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    std::string label() const;
    bool is_exceptional() const noexcept;
    bool is_classical() const noexcept { return !is_exceptional(); }

    auto operator<=>(const SimpleType&) const = default;
};

/// Multiset of simple factors, kept sorted.
class SemisimpleType {
   public:
    SemisimpleType() = default;
    explicit SemisimpleType(std::vector<SimpleType> factors);

    const std::vector<SimpleType>& factors() const noexcept { return factors_; }
    int total_rank() const noexcept;
    bool empty() const noexcept { return factors_.empty(); }

    /// Factors joined by "x", e.g. "A1xA1xB2". Used as the cache key.
    std::string canonical() const;

    SemisimpleType operator*(const SemisimpleType& other) const;

    auto operator<=>(const SemisimpleType&) const = default;

   private:
    std::vector<SimpleType> factors_;
};

/// Canonicalizes (family, rank): returns the factor list it denotes, e.g.
/// D2 -> {A1, A1}, D3 -> {A3}, C2 -> {B2}. Throws RankError when the rank
/// is outside the family's bounds.
std::vector<SimpleType> canonicalize(Family family, int rank);

/// Canonical single simple type; throws RankError if (family, rank) does not
/// canonicalize to exactly one factor of that family.
SimpleType make_simple(Family family, int rank);

/// Grammar: expr := term ("x" term)*, term := [digits "*"] family digits.
/// Whitespace- and case-insensitive.
SemisimpleType parse_type(std::string_view expr);

/// Square integer matrix, row-major.
class IntMatrix {
   public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(int n);

    int size() const noexcept { return n_; }
    std::int64_t& operator()(int r, int c) { return data_[static_cast<size_t>(r) * n_ + c]; }
    std::int64_t operator()(int r, int c) const { return data_[static_cast<size_t>(r) * n_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<std::int64_t> operator*(const std::vector<std::int64_t>& v) const;
    IntMatrix transpose() const;
    std::int64_t determinant() const;

    bool operator==(const IntMatrix&) const = default;

   private:
    int n_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

using RootVector = std::vector<std::int64_t>;

/// C(i, j) = <alpha_j, alpha_i^vee>.
IntMatrix cartan_matrix(SimpleType t);

/// Simple reflections on the root-lattice basis; column j of s_i is the
/// coordinate vector of s_i(alpha_j) = alpha_j - C(i, j) alpha_i.
std::vector<IntMatrix> simple_reflections(SimpleType t);

/// Full root set in root-lattice coordinates. Order: positive roots by
/// height (simple roots first, in Bourbaki order), then their negatives in
/// the same order.
std::vector<RootVector> roots(SimpleType t);

/// Fundamental degrees, ascending.
std::vector<int> degrees(SimpleType t);

BigInt weyl_order(SimpleType t);
BigInt weyl_order(const SemisimpleType& t);

}  // namespace weylspec

#endif
