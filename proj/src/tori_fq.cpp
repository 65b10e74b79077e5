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

#include "weylspec/tori_fq.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "weylspec/error.hpp"
#include "weylspec/partitions.hpp"
#include "weylspec/weyl_enum.hpp"

namespace weylspec {

namespace {

BigInt factorial(int n) {
    BigInt out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

// prod over distinct parts l of scale(l)^{a_l} a_l!, a_l = multiplicity of l.
BigInt centralizer_part(const Partition& parts, int weight) {
    std::map<int, int> mult;
    for (int l : parts) ++mult[l];
    BigInt out = 1;
    for (auto [l, a] : mult) {
        BigInt base = static_cast<long long>(l) * weight;
        for (int k = 0; k < a; ++k) out *= base;
        out *= factorial(a);
    }
    return out;
}

std::string join_parts(const Partition& parts) {
    std::string out;
    for (int l : parts) {
        if (!out.empty()) out += ',';
        out += std::to_string(l);
    }
    return out;
}

CycloPoly signed_cycle_poly(const Partition& lambda, const Partition& mu) {
    CycloPoly p;
    for (int l : lambda) p *= cyclo_x_pow_minus_one(l);
    for (int u : mu) p *= cyclo_x_pow_plus_one(u);
    return p;
}

std::vector<WeylClass> classes_A(int n) {
    std::vector<WeylClass> out;
    const BigInt order = factorial(n + 1);
    for_each_partition(n + 1, [&](const Partition& parts) {
        auto factors = signed_cycle_poly(parts, {}).factors();
        if (--factors[1] == 0) factors.erase(1);
        out.push_back({"A" + std::to_string(n) + "[" + join_parts(parts) + "]", CycloPoly(std::move(factors)),
                       order / centralizer_part(parts, 1)});
    });
    return out;
}

std::vector<WeylClass> classes_signed(SimpleType t) {
    const int n = t.rank;
    const bool is_d = t.family == Family::D;
    std::vector<WeylClass> out;
    const BigInt hyperoctahedral = factorial(n) * (BigInt(1) << n);
    for (int k = n; k >= 0; --k) {
        for_each_partition(k, [&](const Partition& lambda) {
            for_each_partition(n - k, [&](const Partition& mu) {
                if (is_d && mu.size() % 2 != 0) return;
                const std::string base = t.label() + "[" + join_parts(lambda) + "|" + join_parts(mu) + "]";
                const BigInt size = hyperoctahedral / (centralizer_part(lambda, 2) * centralizer_part(mu, 2));
                const CycloPoly poly = signed_cycle_poly(lambda, mu);
                const bool splits = is_d && mu.empty() &&
                                    std::all_of(lambda.begin(), lambda.end(), [](int l) { return l % 2 == 0; });
                if (splits) {
                    out.push_back({base + "+", poly, size / 2});
                    out.push_back({base + "-", poly, size / 2});
                } else {
                    out.push_back({base, poly, size});
                }
            });
        });
    }
    return out;
}

std::vector<WeylClass> classes_exceptional(SimpleType t) {
    if (t.family == Family::E && t.rank == 8)
        throw Error(ErrorCode::DataUnavailable,
                    "E8 class data is not shipped; the bundled E8 data lists characteristic polynomials only");
    WeylRootAction action(t);
    auto classes = enumerate_classes(action);
    std::sort(classes.begin(), classes.end(), [](const EnumeratedClass& a, const EnumeratedClass& b) {
        return std::make_tuple(a.char_poly.element_order(), a.char_poly.text(), a.size, a.representative) <
               std::make_tuple(b.char_poly.element_order(), b.char_poly.text(), b.size, b.representative);
    });
    std::vector<WeylClass> out;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        out.push_back({t.label() + "#" + std::to_string(k + 1) + "/o" + std::to_string(classes[k].char_poly.element_order()),
                       classes[k].char_poly, BigInt(classes[k].size)});
    }
    return out;
}

}  // namespace

std::vector<WeylClass> weyl_classes(SimpleType t) {
    switch (t.family) {
        case Family::A: return classes_A(t.rank);
        case Family::B:
        case Family::C:
        case Family::D: return classes_signed(t);
        default: return classes_exceptional(t);
    }
}

std::vector<WeylClass> weyl_classes(const SemisimpleType& t) {
    std::vector<WeylClass> acc{{"", CycloPoly{}, BigInt(1)}};
    std::map<SimpleType, std::vector<WeylClass>> memo;
    for (const auto& f : t.factors()) {
        auto it = memo.find(f);
        if (it == memo.end()) it = memo.emplace(f, weyl_classes(f)).first;
        std::vector<WeylClass> next;
        next.reserve(acc.size() * it->second.size());
        for (const auto& a : acc)
            for (const auto& b : it->second) {
                WeylClass c;
                c.label = a.label.empty() ? b.label : a.label + " x " + b.label;
                c.char_poly = a.char_poly * b.char_poly;
                if (a.size && b.size) c.size = *a.size * *b.size;
                next.push_back(std::move(c));
            }
        acc = std::move(next);
    }
    return acc;
}

PrimePowerCheck check_prime_power(const BigInt& q) {
    if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be at least 2");
    constexpr unsigned kTrialLimit = 1000000;
    for (unsigned p = 2; p <= kTrialLimit; ++p) {
        if (BigInt(p) * p > q) return {true, true};  // q itself is prime
        if (q % p != 0) continue;
        BigInt rest = q;
        while (rest % p == 0) rest /= p;
        return {rest == 1, true};
    }
    return {true, false};
}

TorusReport torus_orders(const SemisimpleType& t, const BigInt& q) {
    const PrimePowerCheck check = check_prime_power(q);
    if (!check.prime_power) throw Error(ErrorCode::InvalidArgument, "q = " + q.str() + " is not a prime power");
    TorusReport report;
    report.q = q;
    report.q_unverified = !check.decided;
    for (auto& c : weyl_classes(t)) {
        const BigInt order = eval_poly(c.char_poly.expand(), q);
        report.entries.push_back({std::move(c.label), std::move(c.char_poly), order});
    }
    return report;
}

ShareVerdict share_tori(const SemisimpleType& t1, const SemisimpleType& t2, const SpectrumOptions& options) {
    ShareVerdict verdict;
    const int r1 = t1.total_rank();
    const int r2 = t2.total_rank();
    if (r1 != r2) {
        verdict.justification = "ranks differ (" + std::to_string(r1) + " vs " + std::to_string(r2) +
                                "), so the tori have different dimensions";
        return verdict;
    }
    const Spectrum s1 = spectrum(t1, options);
    const Spectrum s2 = spectrum(t2, options);
    std::vector<CycloPoly> diff;
    std::set_symmetric_difference(s1.polys.begin(), s1.polys.end(), s2.polys.begin(), s2.polys.end(),
                                  std::back_inserter(diff));
    if (diff.empty()) {
        verdict.shared = true;
        verdict.justification =
            "equal spectra: finite-order integer matrices are semisimple over Q, so each element of one group is "
            "GL_" + std::to_string(r1) + "(Q)-conjugate to an element of the other";
        return verdict;
    }
    verdict.witness = diff.front();
    const bool in_first = s1.contains(diff.front());
    verdict.justification = "characteristic polynomial " + diff.front().text() + " occurs only in " +
                            (in_first ? t1.canonical() : t2.canonical());
    return verdict;
}

}  // namespace weylspec
