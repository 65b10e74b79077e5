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

#ifndef WEYLSPEC_INVARIANTS_HPP
#define WEYLSPEC_INVARIANTS_HPP

#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "weylspec/root_data.hpp"
#include "weylspec/spectra.hpp"

namespace weylspec {

/// Union of factor indices over all members.
std::set<int> ch_star(const Spectrum& s);

/// Largest multiplicity of Phi_i over members (0 if absent).
int m(const Spectrum& s, int i);

/// Smallest Phi_2 multiplicity among members carrying Phi_i^{m(s, i)}.
/// m_prime(s, 2) = 0; when Phi_i is absent this is the minimum Phi_2
/// multiplicity over the whole spectrum.
int m_prime(const Spectrum& s, int i);

/// Largest mult(Phi_i) + mult(Phi_j) over members. Throws InvalidPair if i == j.
int m_pair(const Spectrum& s, int i, int j);

/// {d : d divides some fundamental degree of t}.
std::set<int> springer_ch_star(SimpleType t);

/// The closed-form ch* lists, family by family (A: 1..n+1; B/C: i, 2i for
/// i <= n; D: i <= n, 2j for j < n; explicit lists for G2, F4, E6, E7, E8).
std::set<int> tabulated_ch_star(SimpleType t);

/// {d : totient(d) <= n}, ascending.
std::vector<int> index_universe(int n);

struct InvariantTable {
    int n = 0;
    std::set<int> ch_star;
    std::map<int, int> m;
    std::map<int, int> m_prime;
    std::map<std::pair<int, int>, int> m_pair;
};

InvariantTable invariant_table(const Spectrum& s, const std::set<int>& indices,
                               const std::vector<std::pair<int, int>>& pairs = {});

/// Anything that answers the three invariant queries. The identification
/// algorithm runs against this interface so residual tables, spectra and
/// closed-form classical data are interchangeable.
class InvariantSource {
   public:
    virtual ~InvariantSource() = default;
    virtual int degree() const = 0;
    virtual int m(int i) const = 0;
    virtual int m_prime(int i) const = 0;
    virtual int m_pair(int i, int j) const = 0;
};

/// Precomputes m and m' over ch*(s); m_pair is evaluated on demand.
class SpectrumInvariants final : public InvariantSource {
   public:
    explicit SpectrumInvariants(Spectrum s);
    int degree() const override { return s_.n; }
    int m(int i) const override;
    int m_prime(int i) const override;
    int m_pair(int i, int j) const override { return weylspec::m_pair(s_, i, j); }
    const Spectrum& spectrum() const noexcept { return s_; }

   private:
    Spectrum s_;
    std::map<int, int> m_;
    std::map<int, int> m_prime_;
    int min_phi2_ = 0;
};

/// Invariants of a classical simple type without materializing its
/// spectrum: each query is a small knapsack over cycle lengths, so ranks in
/// the hundreds are cheap.
class ClassicalInvariants final : public InvariantSource {
   public:
    explicit ClassicalInvariants(SimpleType t);
    int degree() const override { return t_.rank; }
    int m(int i) const override;
    int m_prime(int i) const override;
    int m_pair(int i, int j) const override;

   private:
    SimpleType t_;
};

/// Invariants of a simple type: closed form for classical types, the
/// exceptional spectrum otherwise.
std::unique_ptr<InvariantSource> simple_invariants(SimpleType t, const SpectrumOptions& options = {});

}  // namespace weylspec

#endif
