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

#ifndef WEYLSPEC_EXACT_POLY_HPP
#define WEYLSPEC_EXACT_POLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylspec/bigint.hpp"
#include "weylspec/root_data.hpp"

namespace weylspec {

/// Dense univariate polynomial over Z, constant term first. The zero
/// polynomial has no coefficients.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly monomial(int degree, BigInt coeff = 1);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    BigInt coeff(int k) const { return k >= 0 && k <= degree() ? coeffs_[k] : BigInt(0); }

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;

    /// Division by a monic polynomial; quotient and remainder are integral.
    std::pair<IntPoly, IntPoly> divmod(const IntPoly& monic_divisor) const;

    std::string to_string() const;

    bool operator==(const IntPoly&) const = default;

   private:
    void trim();
    std::vector<BigInt> coeffs_;
};

BigInt eval_poly(const IntPoly& p, const BigInt& x);

std::uint64_t totient(std::uint64_t d);
std::vector<int> divisors(int n);

/// Phi_d, by exact division of x^d - 1 by the Phi_e for proper divisors e.
IntPoly cyclotomic(int d);

/// det(x I - M), Berkowitz (division free).
IntPoly char_poly(const IntMatrix& m);

/// Characteristic polynomial of an n x n matrix from the power traces
/// tr(M^1) .. tr(M^n), via Newton's identities (divisions are exact).
IntPoly char_poly_from_power_traces(std::span<const std::int64_t> traces);

/// Characteristic polynomial stored as its cyclotomic factorization.
class CycloPoly {
   public:
    CycloPoly() = default;
    explicit CycloPoly(std::map<int, int> factors);

    const std::map<int, int>& factors() const noexcept { return factors_; }
    int multiplicity(int d) const;
    int degree() const;
    bool empty() const noexcept { return factors_.empty(); }

    void add(int d, int mult = 1);
    CycloPoly operator*(const CycloPoly& rhs) const;
    CycloPoly& operator*=(const CycloPoly& rhs);

    IntPoly expand() const;

    /// Canonical form `d1:m1,d2:m2,...` sorted by index; the empty product
    /// renders as the empty string.
    std::string text() const;
    static CycloPoly parse(std::string_view text);

    /// lcm of the factor indices: the multiplicative order of any
    /// finite-order matrix with this characteristic polynomial.
    std::uint64_t element_order() const;

    auto operator<=>(const CycloPoly&) const = default;

   private:
    std::map<int, int> factors_;
};

/// Factors p into cyclotomic polynomials by trial division over
/// {d : totient(d) <= deg p}. Throws NotCyclotomicProduct.
CycloPoly cyclo_factor(const IntPoly& p);

/// x^a - 1 and x^a + 1, factored directly from divisor structure.
CycloPoly cyclo_x_pow_minus_one(int a);
CycloPoly cyclo_x_pow_plus_one(int a);

}  // namespace weylspec

#endif
