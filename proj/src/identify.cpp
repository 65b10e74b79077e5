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

#include "weylspec/identify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "weylspec/error.hpp"
#include "weylspec/parallel.hpp"

namespace weylspec {

SimpleType collapse_bc(SimpleType t) {
    if (t.family == Family::C) t.family = Family::B;
    return t;
}

std::string collapsed_label(SimpleType t) {
    if (t.family == Family::B || t.family == Family::C) return "BC" + std::to_string(t.rank);
    return t.label();
}

std::vector<SimpleType> collapse_bc(const SemisimpleType& t) {
    std::vector<SimpleType> out;
    for (const auto& f : t.factors()) out.push_back(collapse_bc(f));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> FactorReport::labels() const {
    std::vector<std::string> out;
    for (const auto& f : factors) out.push_back(collapsed_label(f));
    return out;
}

std::string FactorReport::text() const {
    if (factors.empty()) return "(none)";
    std::string out;
    for (const auto& label : labels()) {
        if (!out.empty()) out += " x ";
        out += label;
    }
    return out;
}

int InvariantFormula::evaluate(const InvariantSource& source) const {
    int total = 0;
    for (const auto& t : terms) {
        switch (t.kind) {
            case InvariantTerm::Kind::m: total += t.coef * source.m(t.i); break;
            case InvariantTerm::Kind::m_prime: total += t.coef * source.m_prime(t.i); break;
            case InvariantTerm::Kind::m_pair: total += t.coef * source.m_pair(t.i, t.j); break;
        }
    }
    return total;
}

std::string InvariantFormula::text() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms) {
        if (!first || t.coef < 0) out << (t.coef < 0 ? (first ? "-" : " - ") : " + ");
        first = false;
        if (std::abs(t.coef) != 1) out << std::abs(t.coef) << '*';
        switch (t.kind) {
            case InvariantTerm::Kind::m: out << "m" << t.i; break;
            case InvariantTerm::Kind::m_prime: out << "m'" << t.i; break;
            case InvariantTerm::Kind::m_pair: out << "m" << t.i << ',' << t.j; break;
        }
    }
    return out.str();
}

namespace {

using Kind = InvariantTerm::Kind;

InvariantFormula M(int i) { return {{{1, Kind::m, i, 0}}}; }
InvariantFormula MP(int i) { return {{{1, Kind::m_prime, i, 0}}}; }
InvariantFormula MPair(int i, int j) { return {{{1, Kind::m_pair, i, j}}}; }

InvariantFormula operator+(InvariantFormula a, const InvariantFormula& b) {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
}

InvariantFormula operator-(InvariantFormula a, const InvariantFormula& b) {
    for (auto t : b.terms) {
        t.coef = -t.coef;
        a.terms.push_back(t);
    }
    return a;
}

// Counts types carrying Phi_i or Phi_j exactly when no type present can
// carry both at full strength: m_i + m_j - m_{i,j}.
InvariantFormula triple(int i, int j) { return M(i) + M(j) - MPair(i, j); }

SimpleType E(int r) { return {Family::E, r}; }
SimpleType B(int r) { return {Family::B, r}; }
SimpleType D(int r) { return {Family::D, r}; }
SimpleType A(int r) { return {Family::A, r}; }
constexpr SimpleType kF4{Family::F, 4};
constexpr SimpleType kG2{Family::G, 2};

// Phi_{2m-2} occurs in D_m only in (x + 1)(x^{m-1} + 1) and in B_{m-1}
// only in x^{m-1} + 1. The Phi_2 multiplicities of these witnesses differ
// by one, so m' separates the two once exceptional carriers are removed.
InvariantFormula d_generic(int m) {
    const int q = 2 * m - 2;
    return m % 2 == 0 ? MP(q) - M(q) : MP(q);
}

std::optional<StageRecipe> exceptional_recipe(int m) {
    switch (m) {
        case 8: return StageRecipe{E(8), {}, M(30)};
        case 7: return StageRecipe{E(7), {}, M(18)};
        case 6: return StageRecipe{E(6), {}, M(9)};
        case 4: return StageRecipe{kF4, {}, M(12)};
        case 2: return StageRecipe{kG2, {}, M(6)};
        default: return std::nullopt;
    }
}

StageRecipe b_recipe(int m) {
    switch (m) {
        case 3: return {B(3), {}, triple(4, 6)};
        case 6: return {B(6), {}, triple(10, 12)};
        case 9: return {B(9), {{E(8), M(30)}}, triple(16, 18)};
        case 10: return {B(10), {{E(8), M(30)}}, M(20)};
        case 12: return {B(12), {{E(8), M(30)}}, M(24)};
        case 15: return {B(15), {}, triple(28, 30)};
        default: return {B(m), {}, M(2 * m)};
    }
}

StageRecipe d_recipe(int m) {
    switch (m) {
        case 4: return {D(4), {{kG2, MPair(4, 6) - M(4)}}, d_generic(4)};
        case 5: return {D(5), {{kF4, M(12)}}, triple(5, 8)};
        case 7: return {D(7), {}, triple(7, 12)};
        case 8: return {D(8), {{E(7), M(18)}}, d_generic(8)};
        case 10: return {D(10), {{E(8), M(30)}, {E(7), MPair(16, 18) - M(16)}}, d_generic(10)};
        case 16: return {D(16), {{E(8), MPair(28, 30) - M(28)}}, d_generic(16)};
        default:
            if (m >= 9 && m <= 15) return {D(m), {{E(8), M(30)}}, d_generic(m)};
            return {D(m), {}, d_generic(m)};
    }
}

StageRecipe a_recipe(int m) {
    switch (m) {
        case 1: return {A(1), {}, M(2)};
        case 2: return {A(2), {}, M(3)};
        case 3: return {A(3), {}, triple(3, 4)};
        case 4: return {A(4), {}, M(5)};
        case 5: return {A(5), {{kF4, M(12)}}, triple(5, 6)};
        case 6: return {A(6), {}, M(7)};
        case 7: return {A(7), {}, triple(7, 8)};
        case 8: return {A(8), {{E(7), M(18)}}, triple(7, 9)};
        case 9: return {A(9), {{E(8), M(30)}, {E(7), M(18)}}, triple(9, 10)};
        case 14: return {A(14), {}, triple(13, 15)};
        default:
            // Phi_{m+1} for odd m + 1 lives only in A_m among the remaining
            // types; for even m + 1 the B and D carriers lack Phi_m.
            if (m % 2 == 0) return {A(m), {}, M(m + 1)};
            return {A(m), {}, triple(m, m + 1)};
    }
}

}  // namespace

std::vector<StageRecipe> stage_recipes(int m) {
    std::vector<StageRecipe> out;
    if (auto e = exceptional_recipe(m)) out.push_back(std::move(*e));
    if (m >= 2) out.push_back(b_recipe(m));
    if (m >= 4) out.push_back(d_recipe(m));
    out.push_back(a_recipe(m));
    return out;
}

ResidualInvariants::ResidualInvariants(const InvariantSource& base, SpectrumOptions options)
    : ResidualInvariants(base, std::move(options), std::make_shared<Sources>()) {}

ResidualInvariants::ResidualInvariants(const InvariantSource& base, SpectrumOptions options,
                                       std::shared_ptr<Sources> sources)
    : base_(base), options_(std::move(options)), sources_(std::move(sources)) {}

ResidualInvariants ResidualInvariants::layered_on(const ResidualInvariants& parent) {
    return ResidualInvariants(parent, parent.options_, parent.sources_);
}

const InvariantSource& ResidualInvariants::source_for(SimpleType t) const {
    std::lock_guard lock(sources_->mutex);
    auto& slot = sources_->map[t];
    if (!slot) slot = simple_invariants(t, options_);
    return *slot;
}

int ResidualInvariants::degree() const {
    int n = base_.degree();
    for (const auto& [t, count] : removed_) n -= count * t.rank;
    return n;
}

int ResidualInvariants::m(int i) const {
    int v = base_.m(i);
    for (const auto& [t, count] : removed_) v -= count * source_for(t).m(i);
    return v;
}

int ResidualInvariants::m_prime(int i) const {
    int v = base_.m_prime(i);
    for (const auto& [t, count] : removed_) v -= count * source_for(t).m_prime(i);
    return v;
}

int ResidualInvariants::m_pair(int i, int j) const {
    int v = base_.m_pair(i, j);
    for (const auto& [t, count] : removed_) v -= count * source_for(t).m_pair(i, j);
    return v;
}

void ResidualInvariants::subtract(SimpleType t, int count) {
    if (count == 0) return;
    removed_[t] += count;
}

namespace {

Error inconsistent(SimpleType t, int value, int stage) {
    return Error(ErrorCode::InconsistentSpectrum, "rank " + std::to_string(stage) + " stage reads multiplicity " +
                                                      std::to_string(value) + " for " + collapsed_label(t));
}

}  // namespace

FactorReport identify_by_cases(const InvariantSource& invariants, int n, const SpectrumOptions& options,
                               std::vector<StageResult>* stages) {
    if (n != invariants.degree())
        throw Error(ErrorCode::RankError, "spectrum has degree " + std::to_string(invariants.degree()) +
                                              ", expected " + std::to_string(n));
    ResidualInvariants residual(invariants, options);
    FactorReport report;
    for (int m = n; m >= 1; --m) {
        StageResult stage{m, {}};
        for (const auto& recipe : stage_recipes(m)) {
            ResidualInvariants view = ResidualInvariants::layered_on(residual);
            for (const auto& [type, formula] : recipe.aux) {
                const int count = formula.evaluate(view);
                if (count < 0) throw inconsistent(type, count, m);
                view.subtract(type, count);
            }
            const int count = recipe.main.evaluate(view);
            if (count < 0) throw inconsistent(recipe.target, count, m);
            if (count == 0) continue;
            residual.subtract(recipe.target, count);
            stage.found.emplace_back(recipe.target, count);
            report.factors.insert(report.factors.end(), count, recipe.target);
        }
        if (stages != nullptr) stages->push_back(std::move(stage));
    }
    std::sort(report.factors.begin(), report.factors.end());

    report.residual_ok = residual.degree() == 0;
    if (report.residual_ok) {
        for (int d : index_universe(n)) {
            if (residual.m(d) != 0 || residual.m_prime(d) != 0) {
                report.residual_ok = false;
                break;
            }
        }
    }
    return report;
}

FactorReport identify_by_cases(const Spectrum& s, int n, const SpectrumOptions& options) {
    const SpectrumInvariants invariants(s);
    return identify_by_cases(invariants, n, options);
}

const Spectrum& SpectrumMemo::get(SimpleType t) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(t); it != memo_.end()) return *it->second;
    }
    auto s = std::make_unique<Spectrum>(spectrum(t, options_));
    std::lock_guard lock(mutex_);
    auto [it, fresh] = memo_.try_emplace(t, std::move(s));
    return *it->second;
}

namespace {

// Simple types of rank exactly r in canonical form.
std::vector<SimpleType> simple_types_of_rank(int r, bool distinguish_bc) {
    std::vector<SimpleType> out;
    out.push_back(A(r));
    if (r >= 2) out.push_back(B(r));
    if (distinguish_bc && r >= 3) out.push_back({Family::C, r});
    if (r >= 4) out.push_back(D(r));
    if (r == 2) out.push_back(kG2);
    if (r == 4) out.push_back(kF4);
    if (r >= 6 && r <= 8) out.push_back(E(r));
    return out;
}

// Calls f(factors) for each multiset of simple types of total rank r, with
// factors in non-increasing order of the list below.
void for_each_multiset(int r, bool distinguish_bc, const std::function<void(const std::vector<SimpleType>&)>& f) {
    std::vector<SimpleType> all;
    for (int k = 1; k <= r; ++k)
        for (auto t : simple_types_of_rank(k, distinguish_bc)) all.push_back(t);
    std::vector<SimpleType> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
        if (left == 0) {
            f(chosen);
            return;
        }
        for (std::size_t k = from; k < all.size(); ++k) {
            if (all[k].rank > left) continue;
            chosen.push_back(all[k]);
            rec(k, left - all[k].rank);
            chosen.pop_back();
        }
    };
    rec(0, r);
}

}  // namespace

std::vector<SemisimpleType> semisimple_types_of_rank(int r, bool distinguish_bc) {
    std::vector<SemisimpleType> out;
    for_each_multiset(r, distinguish_bc, [&](const std::vector<SimpleType>& f) { out.emplace_back(f); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<SimpleType>> identify_by_search(const Spectrum& s, int n, SpectrumMemo& memo, int bound) {
    if (n > bound)
        throw Error(ErrorCode::SearchBoundExceeded,
                    "search over rank " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    if (s.n != n) return {};
    const std::set<int> target_star = ch_star(s);

    std::vector<SimpleType> all;
    for (int k = 1; k <= n; ++k)
        for (auto t : simple_types_of_rank(k, false)) {
            if (t.family == Family::E && t.rank == 8 && memo.options().e8_mode == E8Mode::forbid) continue;
            const auto star = springer_ch_star(t);
            if (std::includes(target_star.begin(), target_star.end(), star.begin(), star.end())) all.push_back(t);
        }

    std::vector<std::vector<SimpleType>> found;
    std::vector<SimpleType> chosen;
    std::function<void(std::size_t, int, const Spectrum&)> rec = [&](std::size_t from, int left, const Spectrum& acc) {
        if (left == 0) {
            if (acc.polys == s.polys) {
                auto f = chosen;
                std::sort(f.begin(), f.end());
                found.push_back(std::move(f));
            }
            return;
        }
        for (std::size_t k = from; k < all.size(); ++k) {
            if (all[k].rank > left) continue;
            Spectrum next = spectrum_product(acc, memo.get(all[k]));
            chosen.push_back(all[k]);
            rec(k, left - all[k].rank, next);
            chosen.pop_back();
        }
    };
    Spectrum unit;
    unit.polys.insert(CycloPoly{});
    rec(0, n, unit);
    std::sort(found.begin(), found.end());
    return found;
}

bool CollisionReport::only_bc() const {
    return std::all_of(collisions.begin(), collisions.end(), [](const Collision& c) { return c.bc_relabeling; });
}

std::vector<std::string> CollisionReport::lines() const {
    std::vector<std::string> out;
    for (const auto& c : collisions) out.push_back("COLLIDE " + c.first.canonical() + " == " + c.second.canonical());
    return out;
}

CollisionReport verify_uniqueness(int max_rank, SpectrumMemo& memo, unsigned threads) {
    std::vector<SemisimpleType> types;
    for (int r = 1; r <= max_rank; ++r)
        for (auto& t : semisimple_types_of_rank(r, true)) {
            const bool has_e8 = std::any_of(t.factors().begin(), t.factors().end(),
                                            [](SimpleType f) { return f.family == Family::E && f.rank == 8; });
            if (has_e8 && memo.options().e8_mode == E8Mode::forbid) continue;
            types.push_back(std::move(t));
        }

    std::vector<Spectrum> spectra(types.size());
    parallel_for(types.size(), threads, [&](std::size_t k, unsigned) {
        Spectrum acc;
        acc.polys.insert(CycloPoly{});
        for (const auto& f : types[k].factors()) acc = spectrum_product(acc, memo.get(f));
        spectra[k] = std::move(acc);
    });

    std::map<std::pair<int, std::set<CycloPoly>>, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < types.size(); ++k)
        groups[{spectra[k].n, std::move(spectra[k].polys)}].push_back(k);

    CollisionReport report;
    report.types_checked = types.size();
    for (const auto& [key, members] : groups) {
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                Collision c{types[members[a]], types[members[b]], false};
                if (c.second.canonical() < c.first.canonical()) std::swap(c.first, c.second);
                c.bc_relabeling = collapse_bc(c.first) == collapse_bc(c.second);
                report.collisions.push_back(std::move(c));
            }
    }
    std::sort(report.collisions.begin(), report.collisions.end(), [](const Collision& x, const Collision& y) {
        return std::pair(x.first.canonical(), x.second.canonical()) < std::pair(y.first.canonical(), y.second.canonical());
    });
    return report;
}

}  // namespace weylspec
