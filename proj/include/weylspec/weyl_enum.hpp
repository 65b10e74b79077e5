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

#ifndef WEYLSPEC_WEYL_ENUM_HPP
#define WEYLSPEC_WEYL_ENUM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "weylspec/bigint.hpp"
#include "weylspec/exact_poly.hpp"
#include "weylspec/root_data.hpp"

namespace weylspec {

using Perm = std::vector<std::uint16_t>;

Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. Every group element factors uniquely as
/// u_0 * u_1 * ... * u_{k-1} with u_i drawn from the level-i transversal.
class StabilizerChain {
   public:
    /// Built by random Schreier-Sims from a fixed seed, stopping once the
    /// chain accounts for `group_order` elements. Deterministic.
    StabilizerChain(std::size_t degree, const std::vector<Perm>& generators, const BigInt& group_order);

    std::size_t degree() const noexcept { return degree_; }
    std::size_t depth() const noexcept { return levels_.size(); }
    BigInt order() const;

    std::uint16_t base_point(std::size_t level) const { return levels_[level].base; }
    std::size_t orbit_size(std::size_t level) const { return levels_[level].orbit.size(); }
    /// Transversal element mapping the base point to the k-th orbit point.
    const Perm& transversal(std::size_t level, std::size_t k) const { return levels_[level].reps[k]; }

    bool contains(const Perm& g) const;

   private:
    struct Level {
        std::uint16_t base = 0;
        std::vector<Perm> gens;
        std::vector<std::uint16_t> orbit;
        std::vector<int> where;  // point -> orbit index, -1 if absent
        std::vector<Perm> reps;
    };

    void rebuild(Level& level) const;
    /// Sifts g through the chain. Returns the residue and the level at which
    /// sifting stopped (depth() if it went all the way).
    std::pair<Perm, std::size_t> strip(Perm g) const;

    std::size_t degree_;
    std::vector<Level> levels_;
};

/// The faithful action of W(t) on the roots of t, with a stabilizer chain
/// for streaming enumeration. Elements are represented by the root indices
/// of the images of the simple roots (these columns determine the matrix).
class WeylRootAction {
   public:
    explicit WeylRootAction(SimpleType t);

    SimpleType type() const noexcept { return type_; }
    int rank() const noexcept { return type_.rank; }
    std::size_t root_count() const noexcept { return roots_.size(); }
    const std::vector<RootVector>& root_vectors() const noexcept { return roots_; }
    const std::vector<Perm>& reflection_perms() const noexcept { return reflections_; }
    const StabilizerChain& chain() const noexcept { return chain_; }

    std::optional<std::uint16_t> root_index(std::span<const std::int64_t> coords) const;
    IntMatrix matrix(std::span<const std::uint16_t> simple_images) const;

    /// Number of independent work blocks (the two outermost transversals).
    std::size_t block_count() const;

    /// Calls visit(const std::uint16_t* simple_images, int det) once for
    /// every group element in block `block`.
    template <class Visitor>
    void visit_block(std::size_t block, Visitor&& visit) const;

    /// Root-lattice coordinate of root r, component i.
    int coord(std::size_t r, int i) const { return coords_[r * kMaxRank + i]; }

    /// Images of the simple roots under s_j w s_j.
    void conjugate_by_reflection(int j, std::span<const std::uint16_t> images, std::span<std::uint16_t> out) const;

    static std::uint64_t pack(std::span<const std::uint16_t> images);
    static constexpr int kMaxRank = 8;

   private:
    template <class Visitor>
    void descend(std::size_t level, const std::uint16_t* current, int det, Visitor& visit) const;

    SimpleType type_;
    IntMatrix cartan_;
    std::vector<RootVector> roots_;
    std::vector<std::int8_t> coords_;
    std::unordered_map<std::uint64_t, std::uint16_t> index_;
    std::vector<Perm> reflections_;
    StabilizerChain chain_;
    std::vector<std::vector<std::int8_t>> rep_det_;  // per level, per transversal element
};

template <class Visitor>
void WeylRootAction::visit_block(std::size_t block, Visitor&& visit) const {
    const int n = rank();
    const std::size_t top = chain_.depth() - 1;
    std::array<std::uint16_t, kMaxRank> images{};
    if (top == 0) {
        const Perm& rep = chain_.transversal(0, block);
        for (int i = 0; i < n; ++i) images[i] = rep[i];
        visit(images.data(), static_cast<int>(rep_det_[0][block]));
        return;
    }
    const std::size_t inner = chain_.orbit_size(top - 1);
    const std::size_t outer_k = block / inner;
    const std::size_t inner_k = block % inner;
    const Perm& outer = chain_.transversal(top, outer_k);
    const Perm& rep = chain_.transversal(top - 1, inner_k);
    for (int i = 0; i < n; ++i) images[i] = rep[outer[i]];
    const int det = rep_det_[top][outer_k] * rep_det_[top - 1][inner_k];
    if (top == 1) {
        visit(images.data(), det);
        return;
    }
    descend(top - 2, images.data(), det, visit);
}

template <class Visitor>
void WeylRootAction::descend(std::size_t level, const std::uint16_t* current, int det, Visitor& visit) const {
    const int n = rank();
    const std::size_t count = chain_.orbit_size(level);
    const auto& dets = rep_det_[level];
    std::array<std::uint16_t, kMaxRank> next{};
    for (std::size_t k = 0; k < count; ++k) {
        const Perm& rep = chain_.transversal(level, k);
        for (int i = 0; i < n; ++i) next[i] = rep[current[i]];
        if (level == 0) visit(next.data(), det * dets[k]);
        else descend(level - 1, next.data(), det * dets[k], visit);
    }
}

struct EnumerationStats {
    std::uint64_t elements = 0;
};

/// Every distinct characteristic polynomial over all |W| elements, computed
/// from power traces of each element matrix. Work is split across blocks;
/// the merged result does not depend on `threads`.
std::set<CycloPoly> enumerate_char_polys(const WeylRootAction& action, unsigned threads,
                                         EnumerationStats* stats = nullptr);

struct EnumeratedClass {
    CycloPoly char_poly;
    std::uint64_t size = 0;
    std::uint64_t representative = 0;  // packed simple-root images
};

/// Conjugacy classes by fusing all elements under conjugation by the simple
/// reflections. Holds every element key in memory; intended for |W| up to
/// a few million.
std::vector<EnumeratedClass> enumerate_classes(const WeylRootAction& action);

}  // namespace weylspec

#endif
