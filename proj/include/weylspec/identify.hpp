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

#ifndef WEYLSPEC_IDENTIFY_HPP
#define WEYLSPEC_IDENTIFY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "weylspec/invariants.hpp"
#include "weylspec/root_data.hpp"
#include "weylspec/spectra.hpp"

namespace weylspec {

/// B_n and C_n share a Weyl group; identification reports them as "BC<n>".
/// The collapsed form of a type maps every C factor to B.
SimpleType collapse_bc(SimpleType t);
std::string collapsed_label(SimpleType t);
std::vector<SimpleType> collapse_bc(const SemisimpleType& t);

struct FactorReport {
    /// Sorted, with B meaning "B or C".
    std::vector<SimpleType> factors;
    bool residual_ok = false;

    std::vector<std::string> labels() const;
    /// Labels joined by " x "; "(none)" when empty.
    std::string text() const;
};

/// A linear combination of the three invariant families.
struct InvariantTerm {
    enum class Kind { m, m_prime, m_pair };
    int coef = 1;
    Kind kind = Kind::m;
    int i = 0;
    int j = 0;
};

struct InvariantFormula {
    std::vector<InvariantTerm> terms;
    int evaluate(const InvariantSource& source) const;
    std::string text() const;
};

/// How the multiplicity of `target` is read off a residual table at its
/// rank stage. Each auxiliary count is evaluated in order on the residual
/// with the previous auxiliary counts removed; the main formula sees all
/// of them removed. Auxiliary counts only correct the reading and are not
/// committed.
struct StageRecipe {
    SimpleType target;
    std::vector<std::pair<SimpleType, InvariantFormula>> aux;
    InvariantFormula main;
};

/// Recipes for the rank-m stage in the order they are applied:
/// exceptional, then B, D, A.
std::vector<StageRecipe> stage_recipes(int m);

/// base minus a nonnegative combination of simple types, by additivity.
class ResidualInvariants final : public InvariantSource {
   public:
    ResidualInvariants(const InvariantSource& base, SpectrumOptions options);

    /// A fresh residual on top of `parent` sharing its per-type sources.
    static ResidualInvariants layered_on(const ResidualInvariants& parent);

    int degree() const override;
    int m(int i) const override;
    int m_prime(int i) const override;
    int m_pair(int i, int j) const override;

    void subtract(SimpleType t, int count);
    const std::map<SimpleType, int>& removed() const noexcept { return removed_; }

   private:
    struct Sources {
        std::mutex mutex;
        std::map<SimpleType, std::unique_ptr<InvariantSource>> map;
    };
    ResidualInvariants(const InvariantSource& base, SpectrumOptions options, std::shared_ptr<Sources> sources);
    const InvariantSource& source_for(SimpleType t) const;

    const InvariantSource& base_;
    SpectrumOptions options_;
    std::map<SimpleType, int> removed_;
    std::shared_ptr<Sources> sources_;
};

struct StageResult {
    int rank = 0;
    std::vector<std::pair<SimpleType, int>> found;
};

/// Rank stages m = n..1, each reading multiplicities from the residual
/// invariants and subtracting them. Throws InconsistentSpectrum on a
/// negative multiplicity; a nonzero final residual gives residual_ok = false.
FactorReport identify_by_cases(const InvariantSource& invariants, int n, const SpectrumOptions& options = {},
                               std::vector<StageResult>* stages = nullptr);
FactorReport identify_by_cases(const Spectrum& s, int n, const SpectrumOptions& options = {});

/// Thread-safe memo of simple-type spectra shared by the search routines.
class SpectrumMemo {
   public:
    explicit SpectrumMemo(SpectrumOptions options = {}) : options_(std::move(options)) {}
    const Spectrum& get(SimpleType t);
    const SpectrumOptions& options() const noexcept { return options_; }

   private:
    SpectrumOptions options_;
    std::mutex mutex_;
    std::map<SimpleType, std::unique_ptr<Spectrum>> memo_;
};

/// Every B/C-collapsed multiset of simple types of total rank n whose
/// product spectrum equals s. Throws SearchBoundExceeded when n > bound.
std::vector<std::vector<SimpleType>> identify_by_search(const Spectrum& s, int n, SpectrumMemo& memo,
                                                        int bound = 8);

/// All semisimple types of total rank r in canonical form. With
/// `distinguish_bc` false, C factors are omitted (B stands for both).
std::vector<SemisimpleType> semisimple_types_of_rank(int r, bool distinguish_bc);

struct Collision {
    SemisimpleType first;
    SemisimpleType second;
    bool bc_relabeling = false;
};

struct CollisionReport {
    std::size_t types_checked = 0;
    std::vector<Collision> collisions;  // sorted by (first, second) canonical text
    bool only_bc() const;
    /// `COLLIDE <t1> == <t2>` lines.
    std::vector<std::string> lines() const;
};

/// Groups every semisimple type of total rank <= max_rank (B and C kept
/// apart) by spectrum and reports all colliding pairs.
CollisionReport verify_uniqueness(int max_rank, SpectrumMemo& memo, unsigned threads = 0);

}  // namespace weylspec

#endif
