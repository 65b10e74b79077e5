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

#include "weylspec/weyl_enum.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <mutex>
#include <numeric>
#include <random>

#include "weylspec/error.hpp"
#include "weylspec/parallel.hpp"

namespace weylspec {

Perm compose(const Perm& a, const Perm& b) {
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

Perm inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint16_t>(i);
    return out;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

namespace {

Perm identity_perm(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), std::uint16_t{0});
    return p;
}

// Product replacement random elements. Uses raw engine output so the
// sequence is identical across standard libraries.
class RandomElements {
   public:
    RandomElements(const std::vector<Perm>& gens, std::size_t degree) : engine_(0x5eed) {
        slots_ = gens;
        while (slots_.size() < 10) slots_.push_back(gens[slots_.size() % gens.size()]);
        acc_ = identity_perm(degree);
        for (int i = 0; i < 60; ++i) next();
    }

    Perm next() {
        const std::size_t n = slots_.size();
        const std::size_t i = engine_() % n;
        std::size_t j = engine_() % (n - 1);
        if (j >= i) ++j;
        if (engine_() & 1U) slots_[i] = compose(slots_[i], slots_[j]);
        else slots_[i] = compose(slots_[i], inverse(slots_[j]));
        acc_ = compose(acc_, slots_[i]);
        return acc_;
    }

   private:
    std::mt19937_64 engine_;
    std::vector<Perm> slots_;
    Perm acc_;
};

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm>& generators,
                                 const BigInt& group_order)
    : degree_(degree) {
    if (generators.empty() || group_order <= 1) return;
    for (const auto& g : generators)
        if (g.size() != degree) throw Error(ErrorCode::InvalidArgument, "generator degree mismatch");

    auto absorb = [&](const Perm& g) {
        auto [residue, level] = strip(g);
        if (is_identity(residue)) return;
        if (level == levels_.size()) {
            Level fresh;
            const auto moved = std::find_if(residue.begin(), residue.end(), [i = std::uint16_t{0}](std::uint16_t v) mutable {
                return v != i++;
            });
            fresh.base = static_cast<std::uint16_t>(moved - residue.begin());
            levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = 0; l <= level; ++l) {
            levels_[l].gens.push_back(residue);
            rebuild(levels_[l]);
        }
    };

    for (const auto& g : generators) absorb(g);
    RandomElements random(generators, degree);
    // Random sifting reaches the full group quickly; the cap only guards
    // against a wrong `group_order`.
    for (int attempts = 0; order() < group_order; ++attempts) {
        if (attempts > 100000) throw Error(ErrorCode::InvalidArgument, "stabilizer chain did not reach group order");
        absorb(random.next());
    }
    if (order() != group_order) throw Error(ErrorCode::InvalidArgument, "generators exceed expected group order");
}

void StabilizerChain::rebuild(Level& level) const {
    level.orbit.assign(1, level.base);
    level.where.assign(degree_, -1);
    level.where[level.base] = 0;
    level.reps.assign(1, identity_perm(degree_));
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
        const std::uint16_t point = level.orbit[k];
        for (const auto& g : level.gens) {
            const std::uint16_t image = g[point];
            if (level.where[image] >= 0) continue;
            level.where[image] = static_cast<int>(level.orbit.size());
            level.orbit.push_back(image);
            level.reps.push_back(compose(g, level.reps[k]));
        }
    }
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm g) const {
    for (std::size_t l = 0; l < levels_.size(); ++l) {
        const Level& level = levels_[l];
        const int k = level.where[g[level.base]];
        if (k < 0) return {std::move(g), l};
        g = compose(inverse(level.reps[k]), g);
    }
    return {std::move(g), levels_.size()};
}

BigInt StabilizerChain::order() const {
    BigInt out = 1;
    for (const auto& level : levels_) out *= level.orbit.size();
    return out;
}

bool StabilizerChain::contains(const Perm& g) const {
    if (g.size() != degree_) return false;
    auto [residue, level] = strip(g);
    return level == levels_.size() && is_identity(residue);
}

namespace {

std::uint64_t pack_coords(std::span<const std::int64_t> coords) {
    std::uint64_t key = 0;
    for (auto c : coords) key = (key << 4) | static_cast<std::uint64_t>(c + 8);
    return key;
}

std::vector<Perm> build_reflection_perms(SimpleType t, const std::vector<RootVector>& rts) {
    std::unordered_map<std::uint64_t, std::uint16_t> index;
    for (std::size_t r = 0; r < rts.size(); ++r) index.emplace(pack_coords(rts[r]), static_cast<std::uint16_t>(r));
    std::vector<Perm> out;
    for (const auto& s : simple_reflections(t)) {
        Perm p(rts.size());
        for (std::size_t r = 0; r < rts.size(); ++r) p[r] = index.at(pack_coords(s * rts[r]));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

WeylRootAction::WeylRootAction(SimpleType t)
    : type_(t),
      cartan_(cartan_matrix(t)),
      roots_(roots(t)),
      reflections_(build_reflection_perms(t, roots_)),
      chain_(roots_.size(), reflections_, weyl_order(t)) {
    if (t.rank > kMaxRank) throw Error(ErrorCode::StrategyUnavailable, "root action enumeration supports rank <= 8");
    if (roots_.size() > 255) throw Error(ErrorCode::StrategyUnavailable, "too many roots for packed keys");
    coords_.assign(roots_.size() * kMaxRank, 0);
    for (std::size_t r = 0; r < roots_.size(); ++r) {
        index_.emplace(pack_coords(roots_[r]), static_cast<std::uint16_t>(r));
        for (int i = 0; i < t.rank; ++i) coords_[r * kMaxRank + i] = static_cast<std::int8_t>(roots_[r][i]);
    }
    rep_det_.resize(chain_.depth());
    for (std::size_t l = 0; l < chain_.depth(); ++l) {
        for (std::size_t k = 0; k < chain_.orbit_size(l); ++k) {
            const Perm& rep = chain_.transversal(l, k);
            rep_det_[l].push_back(static_cast<std::int8_t>(matrix(std::span(rep).first(t.rank)).determinant()));
        }
    }
}

std::size_t WeylRootAction::block_count() const {
    const std::size_t depth = chain_.depth();
    if (depth == 1) return chain_.orbit_size(0);
    return chain_.orbit_size(depth - 1) * chain_.orbit_size(depth - 2);
}

std::optional<std::uint16_t> WeylRootAction::root_index(std::span<const std::int64_t> coords) const {
    if (static_cast<int>(coords.size()) != rank()) return std::nullopt;
    for (auto c : coords)
        if (c < -8 || c > 7) return std::nullopt;
    const auto it = index_.find(pack_coords(coords));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

IntMatrix WeylRootAction::matrix(std::span<const std::uint16_t> simple_images) const {
    const int n = rank();
    IntMatrix m(n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) m(r, c) = coord(simple_images[c], r);
    return m;
}

void WeylRootAction::conjugate_by_reflection(int j, std::span<const std::uint16_t> images,
                                             std::span<std::uint16_t> out) const {
    const int n = rank();
    const std::size_t half = roots_.size() / 2;
    std::array<std::int64_t, kMaxRank> buf{};
    for (int i = 0; i < n; ++i) {
        std::uint16_t target;
        if (i == j) {
            target = static_cast<std::uint16_t>((images[j] + half) % roots_.size());
        } else if (cartan_(j, i) == 0) {
            target = images[i];
        } else {
            // w(s_j alpha_i) = w(alpha_i) - C(j, i) w(alpha_j)
            for (int r = 0; r < n; ++r) buf[r] = coord(images[i], r) - cartan_(j, i) * coord(images[j], r);
            target = index_.at(pack_coords(std::span(buf).first(n)));
        }
        out[i] = reflections_[j][target];
    }
}

std::uint64_t WeylRootAction::pack(std::span<const std::uint16_t> images) {
    std::uint64_t key = 0;
    for (auto v : images) key = (key << 8) | v;
    return key;
}

namespace {

// An element w of a Weyl group is orthogonal for the invariant form, so its
// characteristic polynomial satisfies e_{n-k} = det(w) e_k. The traces of
// w, ..., w^h with h = floor(n / 2) plus det(w) therefore determine it.
constexpr int kTraceBits = 5;
constexpr int kTraceBias = 16;

template <int N>
std::uint32_t trace_key(const WeylRootAction& action, const std::uint16_t* images, int det) {
    std::int16_t m[N][N];
    for (int c = 0; c < N; ++c)
        for (int r = 0; r < N; ++r) m[r][c] = static_cast<std::int16_t>(action.coord(images[c], r));

    int p[4] = {0, 0, 0, 0};
    for (int i = 0; i < N; ++i) p[0] += m[i][i];
    if constexpr (N >= 2) {
        std::int16_t m2[N][N] = {};
        for (int r = 0; r < N; ++r)
            for (int k = 0; k < N; ++k) {
                const std::int16_t a = m[r][k];
                for (int c = 0; c < N; ++c) m2[r][c] = static_cast<std::int16_t>(m2[r][c] + a * m[k][c]);
            }
        for (int i = 0; i < N; ++i) p[1] += m2[i][i];
        if constexpr (N >= 6) {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) p[2] += m2[i][j] * m[j][i];
        }
        if constexpr (N >= 8) {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) p[3] += m2[i][j] * m2[j][i];
        }
    }
    std::uint32_t key = det > 0 ? 1U : 0U;
    for (int k = 0; k < 4; ++k) key = (key << kTraceBits) | static_cast<std::uint32_t>(p[k] + kTraceBias);
    return key;
}

CycloPoly poly_from_trace_key(int n, std::uint32_t key) {
    std::int64_t p[4];
    for (int k = 3; k >= 0; --k) {
        p[k] = static_cast<std::int64_t>(key & ((1U << kTraceBits) - 1)) - kTraceBias;
        key >>= kTraceBits;
    }
    const std::int64_t det = (key & 1U) ? 1 : -1;
    const int half = n / 2;
    // Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    std::vector<BigInt> e(n + 1);
    e[0] = 1;
    for (int k = 1; k <= half; ++k) {
        BigInt acc = 0;
        for (int i = 1; i <= k; ++i) acc += (i % 2 == 1 ? 1 : -1) * e[k - i] * p[i - 1];
        if (acc % k != 0) throw Error(ErrorCode::NotCyclotomicProduct, "inexact Newton step");
        e[k] = acc / k;
    }
    for (int k = 0; k <= half; ++k) e[n - k] = det * e[k];
    std::vector<BigInt> coeffs(n + 1);
    for (int k = 0; k <= n; ++k) coeffs[n - k] = (k % 2 == 0 ? 1 : -1) * e[k];
    return cyclo_factor(IntPoly(std::move(coeffs)));
}

template <int N>
std::set<CycloPoly> enumerate_fixed(const WeylRootAction& action, unsigned threads, EnumerationStats* stats) {
    constexpr std::size_t kKeySpace = std::size_t{1} << (4 * kTraceBits + 1);
    threads = resolve_threads(threads);
    std::vector<std::vector<std::uint64_t>> seen(threads, std::vector<std::uint64_t>(kKeySpace / 64, 0));
    std::vector<std::uint64_t> counts(threads, 0);

    parallel_for(action.block_count(), threads, [&](std::size_t block, unsigned worker) {
        auto& bits = seen[worker];
        std::uint64_t visited = 0;
        action.visit_block(block, [&](const std::uint16_t* images, int det) {
            const std::uint32_t key = trace_key<N>(action, images, det);
            bits[key >> 6] |= std::uint64_t{1} << (key & 63);
            ++visited;
        });
        counts[worker] += visited;
    });

    for (unsigned t = 1; t < threads; ++t)
        for (std::size_t w = 0; w < seen[0].size(); ++w) seen[0][w] |= seen[t][w];

    std::set<CycloPoly> out;
    for (std::size_t w = 0; w < seen[0].size(); ++w) {
        std::uint64_t word = seen[0][w];
        while (word != 0) {
            const int bit = std::countr_zero(word);
            word &= word - 1;
            out.insert(poly_from_trace_key(N, static_cast<std::uint32_t>(w * 64 + bit)));
        }
    }
    if (stats != nullptr) stats->elements = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    return out;
}

}  // namespace

std::set<CycloPoly> enumerate_char_polys(const WeylRootAction& action, unsigned threads, EnumerationStats* stats) {
    switch (action.rank()) {
        case 1: return enumerate_fixed<1>(action, threads, stats);
        case 2: return enumerate_fixed<2>(action, threads, stats);
        case 3: return enumerate_fixed<3>(action, threads, stats);
        case 4: return enumerate_fixed<4>(action, threads, stats);
        case 5: return enumerate_fixed<5>(action, threads, stats);
        case 6: return enumerate_fixed<6>(action, threads, stats);
        case 7: return enumerate_fixed<7>(action, threads, stats);
        case 8: return enumerate_fixed<8>(action, threads, stats);
        default: throw Error(ErrorCode::StrategyUnavailable, "enumeration supports rank 1..8");
    }
}

std::vector<EnumeratedClass> enumerate_classes(const WeylRootAction& action) {
    const int n = action.rank();
    std::vector<std::uint64_t> keys;
    keys.reserve(static_cast<std::size_t>(weyl_order(action.type())));
    for (std::size_t b = 0; b < action.block_count(); ++b)
        action.visit_block(b, [&](const std::uint16_t* images, int) {
            keys.push_back(WeylRootAction::pack(std::span(images, n)));
        });
    std::sort(keys.begin(), keys.end());

    auto unpack = [n](std::uint64_t key, std::span<std::uint16_t> images) {
        for (int i = n - 1; i >= 0; --i) {
            images[i] = static_cast<std::uint16_t>(key & 0xFF);
            key >>= 8;
        }
    };
    auto position = [&](std::uint64_t key) {
        const auto it = std::lower_bound(keys.begin(), keys.end(), key);
        assert(it != keys.end() && *it == key);
        return static_cast<std::size_t>(it - keys.begin());
    };

    std::vector<bool> assigned(keys.size(), false);
    std::vector<EnumeratedClass> out;
    std::array<std::uint16_t, WeylRootAction::kMaxRank> cur{};
    std::array<std::uint16_t, WeylRootAction::kMaxRank> nxt{};
    std::vector<std::size_t> queue;
    for (std::size_t start = 0; start < keys.size(); ++start) {
        if (assigned[start]) continue;
        assigned[start] = true;
        queue.assign(1, start);
        for (std::size_t q = 0; q < queue.size(); ++q) {
            unpack(keys[queue[q]], cur);
            for (int j = 0; j < n; ++j) {
                action.conjugate_by_reflection(j, std::span(cur).first(n), std::span(nxt).first(n));
                const std::size_t pos = position(WeylRootAction::pack(std::span(nxt).first(n)));
                if (!assigned[pos]) {
                    assigned[pos] = true;
                    queue.push_back(pos);
                }
            }
        }
        unpack(keys[start], cur);
        EnumeratedClass cls;
        cls.char_poly = cyclo_factor(char_poly(action.matrix(std::span(cur).first(n))));
        cls.size = queue.size();
        cls.representative = keys[start];
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace weylspec
