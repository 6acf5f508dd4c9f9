/*
   Copyright 2026 The ffiwa authors

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

#ifndef FFIWA_STICKELBERGER_HPP
#define FFIWA_STICKELBERGER_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "extension.hpp"
#include "groupring.hpp"
#include "parallel.hpp"

namespace ffiwa {

/// The sets S (Euler factors deleted) and T (integrality factors added).
/// S must be nonempty and disjoint from T; membership of infinity is always
/// explicit since Place models it as a first-class value.
struct PlaceSets {
    std::vector<Place> S;
    std::vector<Place> T;

    PlaceSets() = default;
    PlaceSets(std::vector<Place> s, std::vector<Place> t) : S(std::move(s)), T(std::move(t)) {
        std::sort(S.begin(), S.end());
        std::sort(T.begin(), T.end());
        validate();
    }
    void validate() const {
        if (S.empty()) throw UsageError("S must be nonempty");
        for (size_t i = 1; i < S.size(); ++i)
            if (S[i] == S[i - 1]) throw UsageError("S has a repeated place");
        for (size_t i = 1; i < T.size(); ++i)
            if (T[i] == T[i - 1]) throw UsageError("T has a repeated place");
        for (const auto& v : S)
            for (const auto& w : T)
                if (v == w) throw UsageError("S and T must be disjoint");
    }
    bool in_S(const Place& v) const { return std::binary_search(S.begin(), S.end(), v); }
    bool in_T(const Place& v) const { return std::binary_search(T.begin(), T.end(), v); }
};

namespace detail {

inline void require_ramified_inside_S(const ExtensionDatum& D, const PlaceSets& sets) {
    for (const auto& v : D.ramified_places())
        if (!sets.in_S(v))
            throw UsageError("ramified place outside S: " + place_to_string(v));
}

}  // namespace detail

/// The equivariant zeta product
///   Theta(u) = prod_{v not in S} (1 - [v] u^{deg v})^{-1}
///            * prod_{v in T}     (1 - [v] (q u)^{deg v}),
/// truncated at u^bound, with exact integer coefficients in Z[G].
///
/// Places are processed degree by degree in ascending order; within one
/// degree the finitely many residue classes mod f are folded in a fixed
/// order, so the result does not depend on the thread count.
inline GroupRingSeries<ZRing> theta_series(const ExtensionDatum& D, const PlaceSets& sets,
                                           int bound) {
    if (bound < 0) throw UsageError("u-bound must be >= 0");
    detail::require_ramified_inside_S(D, sets);
    const FieldSpec& F = D.base;

    auto cc = count_irreducibles_by_class(F, D.modulus_f, uint32_t(std::max(bound, 1)));

    // S-places coprime to f are removed from the per-class counts
    std::vector<std::vector<Int>> counts = cc.counts;
    for (const auto& v : sets.S) {
        if (v.infinite || int(v.degree()) > bound) continue;
        if (D.modulus_f.deg() > 0 && poly_mod(F, D.modulus_f, v.prime).is_zero()) continue;
        Poly cls = D.modulus_f.deg() > 0 ? poly_mod(F, v.prime, D.modulus_f) : Poly::zero();
        counts[v.degree() - 1][cc.class_index.at(cls)] -= 1;
    }

    auto series = GroupRingSeries<ZRing>::one(ZRing{}, D.G, bound);
    for (uint32_t d = 1; int(d) <= bound; ++d) {
        for (size_t i = 0; i < cc.classes.size(); ++i) {
            const Int& c = counts[d - 1][i];
            if (c == 0) continue;
            if (c < 0) throw Error("negative place count after S removal");
            GrpElem img = D.G.add(D.unit_image(cc.classes[i]),
                                  D.G.smul(Int(d), D.degree_image()));
            series.mul_binomial_power(img, d, Int(1), c, -1);
        }
    }
    // unramified places dividing f, and infinity, when not deleted by S
    if (D.modulus_f.deg() > 0) {
        for (const auto& [P, e] : poly_factor(F, D.modulus_f)) {
            (void)e;
            Place v = Place::finite(P);
            if (sets.in_S(v) || D.is_ramified(v) || int(v.degree()) > bound) continue;
            series.mul_binomial_power(D.frobenius(v), v.degree(), Int(1), Int(1), -1);
        }
    }
    if (!sets.in_S(Place::infinity()) && bound >= 1)
        series.mul_binomial_power(D.frobenius(Place::infinity()), 1, Int(1), Int(1), -1);

    // T factors: (1 - [v] (q u)^{deg v})
    for (const auto& v : sets.T) {
        if (int(v.degree()) > bound) continue;
        GrpElem img = D.frobenius(v);
        series.mul_binomial_power(img, v.degree(), Int(int_pow(Int(F.q), v.degree())),
                                  Int(1), +1);
    }
    return series;
}

/// Result of evaluating Theta as a polynomial: detected degree, the value
/// theta = Theta(1), and the series used for the tail verification.
struct ThetaResult {
    GroupRingSeries<ZRing> series;
    int degree = 0;          ///< detected polynomial degree B
    GroupRing<ZRing> theta;  ///< Theta(1)
    bool stabilized = false; ///< zero tail observed through the truncation
    int bound_used = 0;
};

inline int default_theta_bound(const ExtensionDatum& D, const PlaceSets& sets) {
    int b = 2 * std::max(D.modulus_f.deg(), 0) + int(sets.S.size()) + 4;
    for (const auto& v : sets.T) b += int(v.degree());
    return b;
}

/// Computes theta = Theta(1) in Z[G], detecting the polynomial degree by a
/// run of zero coefficients and verifying the zero tail out to twice the
/// detected degree.  Retries once with a doubled bound before giving up.
inline ThetaResult theta_element(const ExtensionDatum& D, const PlaceSets& sets,
                                 std::optional<int> degree_hint = std::nullopt) {
    if (sets.T.empty()) throw UsageError("theta_element requires a nonempty T");
    int bound = degree_hint.value_or(default_theta_bound(D, sets));

    auto attempt = [&](int bnd) -> std::optional<ThetaResult> {
        auto series = theta_series(D, sets, bnd);
        int top = 0;  // the constant coefficient of the product is always 1
        for (int j = bnd; j >= 0; --j)
            if (!series.coef[size_t(j)].is_zero()) { top = j; break; }
        if (bnd - top < 3) return std::nullopt;  // no convincing zero tail
        if (bnd < 2 * top) return std::nullopt;  // tail not verified far enough
        ThetaResult r{std::move(series), top, GroupRing<ZRing>(ZRing{}, D.G), true, bnd};
        r.theta = grs_value_at_one(r.series, top);
        return r;
    };

    if (auto r = attempt(bound)) return *r;
    // one adaptive retry: either the tail was too short or the bound was
    // below twice the detected degree
    if (auto r = attempt(2 * bound + 3)) return *r;
    throw PrecisionError("polynomiality not detected at bound " +
                         std::to_string(2 * bound + 3));
}

/// Functoriality report: pr(theta_K) compared with theta_{K^H}.
struct FunctorialityReport {
    ThetaResult upstairs;
    ThetaResult downstairs;
    GroupRing<ZRing> projected;
    bool equal = false;
};

inline FunctorialityReport check_functoriality(const ExtensionDatum& D,
                                               const std::vector<GrpElem>& hgens,
                                               const PlaceSets& sets) {
    auto [Q, P] = quotient_datum(D, hgens);
    FunctorialityReport rep{theta_element(D, sets), theta_element(Q, sets),
                            GroupRing<ZRing>(ZRing{}, Q.G), false};
    rep.projected = project_group_ring(rep.upstairs.theta, P);
    rep.equal = rep.projected == rep.downstairs.theta;
    return rep;
}

/// The Main Theorem correction factor at a finite layer with cyclic p-power
/// Galois group: delta = prod_{v in S_0} (1 - [v]) over the unramified part
/// S_0 of S, divided by (1 - Fr) in the constant-tower branch (S_0 = S) via
/// the exact identity (1 - Fr^m) = (1 - Fr)(1 + Fr + ... + Fr^{m-1}).
inline GroupRing<ZRing> delta_factor(const ExtensionDatum& layer, const PlaceSets& sets,
                                     bool* constant_branch = nullptr) {
    if (layer.G.rank() > 1) throw UsageError("delta_factor needs a cyclic layer group");
    std::vector<Place> S0;
    for (const auto& v : sets.S) {
        if (layer.is_ramified(v)) continue;
        GrpElem fr = layer.frobenius(v);
        if (layer.G.is_identity(fr) && layer.G.order() > 1)
            throw UsageError("theta vanishes identically; Main Theorem hypotheses violated");
        S0.push_back(v);
    }
    bool constant = S0.size() == sets.S.size();
    if (constant_branch) *constant_branch = constant;
    auto one = GroupRing<ZRing>::one(ZRing{}, layer.G);
    GroupRing<ZRing> delta = one;
    if (!constant) {
        for (const auto& v : S0) {
            auto factor = gr_sub(one, GroupRing<ZRing>::monomial(ZRing{}, layer.G,
                                                                 layer.frobenius(v)));
            delta = gr_mul(delta, factor);
        }
        return delta;
    }
    // constant branch: verify [v] = Fr^{deg v} and divide one factor by 1 - Fr
    GrpElem Fr = layer.degree_image();
    for (const auto& v : S0)
        if (layer.frobenius(v) != layer.G.smul(Int(v.degree()), Fr))
            throw UsageError("constant branch requires [v] = Fr^{deg v}");
    for (size_t i = 0; i < S0.size(); ++i) {
        if (i == 0) {
            // (1 - Fr^{deg})/(1 - Fr) = 1 + Fr + ... + Fr^{deg-1}
            GroupRing<ZRing> geo(ZRing{}, layer.G);
            for (uint32_t j = 0; j < S0[0].degree(); ++j) {
                auto k = layer.G.flat(layer.G.smul(Int(j), Fr));
                geo.c[k] = geo.ring.add(geo.c[k], Int(1));
            }
            delta = gr_mul(delta, geo);
        } else {
            auto factor = gr_sub(one, GroupRing<ZRing>::monomial(ZRing{}, layer.G,
                                                                 layer.frobenius(S0[i])));
            delta = gr_mul(delta, factor);
        }
    }
    return delta;
}

}  // namespace ffiwa

#endif
