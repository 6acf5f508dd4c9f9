// Copyright 2026 The ffiwa authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "ffiwa/stickelberger.hpp"

using namespace ffiwa;

namespace {

// Independent oracle: the same Euler product computed place by place from an
// honest enumeration, without the residue-class counting shortcut.
GroupRingSeries<ZRing> theta_series_by_enumeration(const ExtensionDatum& D,
                                                   const PlaceSets& sets, int bound) {
    auto series = GroupRingSeries<ZRing>::one(ZRing{}, D.G, bound);
    for (const auto& v : enumerate_places(D.base, uint32_t(bound), true)) {
        if (sets.in_S(v) || D.is_ramified(v)) continue;
        series.mul_binomial_power(D.frobenius(v), v.degree(), Int(1), Int(1), -1);
    }
    for (const auto& v : sets.T) {
        if (int(v.degree()) > bound) continue;
        series.mul_binomial_power(D.frobenius(v), v.degree(),
                                  int_pow(Int(D.base.q), v.degree()), Int(1), +1);
    }
    return series;
}

PlaceSets sets_of(const FieldSpec& F, std::vector<std::string> s, std::vector<std::string> t) {
    std::vector<Place> S, T;
    for (const auto& x : s) S.push_back(place_from_string(F, x));
    for (const auto& x : t) T.push_back(place_from_string(F, x));
    return PlaceSets(std::move(S), std::move(T));
}

}  // namespace

TEST_CASE("theta series: trivial datum closed forms") {
    FieldSpec F = make_field(2);
    auto D = make_trivial_datum(F);
    // S = {inf}, T = {T}: the zeta denominator cancels exactly and Theta = 1
    auto s1 = theta_series(D, sets_of(F, {"inf"}, {"T"}), 6);
    REQUIRE(s1.coef[0].c[0] == 1);
    for (int j = 1; j <= 6; ++j) REQUIRE(s1.coef[size_t(j)].is_zero());
    // S = {inf, T}, T = {T+1}: Theta = 1 - u
    auto s2 = theta_series(D, sets_of(F, {"inf", "T"}, {"T+1"}), 6);
    REQUIRE(s2.coef[0].c[0] == 1);
    REQUIRE(s2.coef[1].c[0] == -1);
    for (int j = 2; j <= 6; ++j) REQUIRE(s2.coef[size_t(j)].is_zero());
}

TEST_CASE("theta series with empty T is not integral-polynomial") {
    FieldSpec F = make_field(2);
    auto D = make_trivial_datum(F);
    PlaceSets sets({Place::infinity()}, {});
    // prod over finite places = 1/(1-2u): coefficients 2^j, no zero tail
    auto s = theta_series(D, sets, 8);
    for (int j = 0; j <= 8; ++j) REQUIRE(s.coef[size_t(j)].c[0] == int_pow(Int(2), j));
    REQUIRE_THROWS_AS(theta_element(D, sets), UsageError);
}

TEST_CASE("theta element: spec values") {
    FieldSpec F = make_field(2);
    auto D = make_trivial_datum(F);
    auto r1 = theta_element(D, sets_of(F, {"inf"}, {"T"}));
    REQUIRE(r1.stabilized);
    REQUIRE(r1.degree == 0);
    REQUIRE(r1.theta.c[0] == 1);
    // a place of S splits completely in the trivial extension: theta = 0
    auto r2 = theta_element(D, sets_of(F, {"inf", "T"}, {"T+1"}));
    REQUIRE(r2.theta.is_zero());
}

TEST_CASE("theta of the constant quadratic extension") {
    FieldSpec F = make_field(2);
    auto D = make_constant_datum(F, 2);
    auto r = theta_element(D, sets_of(F, {"inf"}, {"T"}));
    // Theta = Z(sigma u)(1 - sigma u)(1 - 2 sigma u) = 1
    REQUIRE(r.degree == 0);
    REQUIRE(r.theta.c[0] == 1);
    REQUIRE(r.theta.c[1] == 0);
    // functoriality to the trivial datum: augmentation is 1
    REQUIRE(r.theta.augmentation() == 1);
}

TEST_CASE("theta matches the place-by-place enumeration oracle") {
    FieldSpec F2 = make_field(2);
    auto D1 = make_carlitz_datum(F2, poly_from_string(F2, "T^2+T+1"));
    auto sets1 = sets_of(F2, {"T^2+T+1"}, {"T"});
    REQUIRE(theta_series(D1, sets1, 8) == theta_series_by_enumeration(D1, sets1, 8));

    FieldSpec F3 = make_field(3);
    auto D2 = make_carlitz_datum(F3, poly_from_string(F3, "T^2"));
    auto sets2 = sets_of(F3, {"T", "inf"}, {"T+1"});
    REQUIRE(theta_series(D2, sets2, 7) == theta_series_by_enumeration(D2, sets2, 7));

    auto D3 = make_constant_datum(F3, 4);
    auto sets3 = sets_of(F3, {"inf"}, {"T", "T^2+1"});
    REQUIRE(theta_series(D3, sets3, 7) == theta_series_by_enumeration(D3, sets3, 7));
}

TEST_CASE("S-removal relation: theta_S = (1 - [v]) theta_{S minus v}") {
    FieldSpec F = make_field(2);
    auto D = make_constant_datum(F, 2);
    Place v = place_from_string(F, "T");
    auto big = theta_element(D, sets_of(F, {"inf", "T"}, {"T+1"}));
    auto small = theta_element(D, sets_of(F, {"inf"}, {"T+1"}));
    auto one = GroupRing<ZRing>::one(ZRing{}, D.G);
    auto factor = gr_sub(one, GroupRing<ZRing>::monomial(ZRing{}, D.G, D.frobenius(v)));
    REQUIRE(big.theta == gr_mul(factor, small.theta));

    // same relation on a Z/4 constant layer with a degree-2 place
    auto D4 = make_constant_datum(F, 4);
    Place w = place_from_string(F, "T^2+T+1");
    auto bigger = theta_element(D4, sets_of(F, {"inf", "T^2+T+1"}, {"T"}));
    auto smaller = theta_element(D4, sets_of(F, {"inf"}, {"T"}));
    auto fw = gr_sub(GroupRing<ZRing>::one(ZRing{}, D4.G),
                     GroupRing<ZRing>::monomial(ZRing{}, D4.G, D4.frobenius(w)));
    REQUIRE(bigger.theta == gr_mul(fw, smaller.theta));
}

TEST_CASE("functoriality: constant Z/4 to Z/2 and to the trivial quotient") {
    FieldSpec F = make_field(2);
    auto D = make_constant_datum(F, 4);
    auto sets = sets_of(F, {"inf"}, {"T"});
    // H = <2>: quotient Z/2
    auto rep = check_functoriality(D, {GrpElem{2}}, sets);
    REQUIRE(rep.equal);
    // H = G: the projection of theta is its augmentation, theta of the
    // trivial extension
    auto repfull = check_functoriality(D, {GrpElem{1}}, sets);
    REQUIRE(repfull.equal);
    auto Dtriv = make_trivial_datum(F);
    auto t0 = theta_element(Dtriv, sets);
    REQUIRE(repfull.downstairs.theta.c[0] == t0.theta.c[0]);
    // H = {0}: equality with itself
    auto repid = check_functoriality(D, {}, sets);
    REQUIRE(repid.equal);
}

TEST_CASE("functoriality: Carlitz Z/3 datum over F_2") {
    FieldSpec F = make_field(2);
    auto D = make_carlitz_datum(F, poly_from_string(F, "T^2+T+1"));
    auto sets = sets_of(F, {"T^2+T+1"}, {"T"});
    auto rep = check_functoriality(D, {}, sets);
    REQUIRE(rep.equal);
    auto repfull = check_functoriality(D, {GrpElem{1}}, sets);
    REQUIRE(repfull.equal);
}

TEST_CASE("T-swap: character valuations are independent of T") {
    FieldSpec F = make_field(2);
    auto D = make_constant_datum(F, 2);
    auto sets1 = sets_of(F, {"inf", "T"}, {"T+1"});
    auto sets2 = sets_of(F, {"inf", "T"}, {"T^2+T+1"});
    auto t1 = theta_element(D, sets1).theta;
    auto t2 = theta_element(D, sets2).theta;
    auto chars = characters(D.G);
    for (const auto& phi : chars) {
        if (phi.is_trivial()) continue;  // p-power-order characters only
        CycloRing R(phi.order());
        IntPoly v1 = evaluate_character(t1, phi);
        IntPoly v2 = evaluate_character(t2, phi);
        REQUIRE(valuation_cyclotomic(R, v1, 2) == valuation_cyclotomic(R, v2, 2));
    }
}

TEST_CASE("delta factor: empty S_0, degree-1 and degree-2 constant branches") {
    FieldSpec F = make_field(2);
    // all of S ramified: Carlitz T^2 with S = {T}: delta = 1
    auto Dw = make_carlitz_datum(F, poly_from_string(F, "T^2"));
    bool constant = false;
    auto d1 = delta_factor(Dw, sets_of(F, {"T"}, {"T+1"}), &constant);
    REQUIRE(!constant);
    REQUIRE(d1 == GroupRing<ZRing>::one(ZRing{}, Dw.G));
    // constant layer, S = {v} with deg v = 1: delta = 1
    auto Dc = make_constant_datum(F, 4);
    auto d2 = delta_factor(Dc, sets_of(F, {"T"}, {"T+1"}), &constant);
    REQUIRE(constant);
    REQUIRE(d2 == GroupRing<ZRing>::one(ZRing{}, Dc.G));
    // constant layer, S = {v} with deg v = 2: delta = 1 + Fr
    auto d3 = delta_factor(Dc, sets_of(F, {"T^2+T+1"}, {"T"}), &constant);
    REQUIRE(constant);
    GroupRing<ZRing> expect(ZRing{}, Dc.G);
    expect.c[0] = 1;
    expect.c[Dc.G.flat(GrpElem{1})] = 1;
    REQUIRE(d3 == expect);
}

TEST_CASE("delta factor rejects a completely split place in S") {
    FieldSpec F = make_field(2);
    auto D = make_carlitz_datum(F, poly_from_string(F, "T^2"));
    // infinity splits completely in the Carlitz tower over F_2
    REQUIRE_THROWS_AS(delta_factor(D, sets_of(F, {"T", "inf"}, {"T+1"}), nullptr),
                      UsageError);
}

TEST_CASE("polynomiality across the Carlitz corpus (moduli of degree <= 2)") {
    for (uint32_t q : {2u, 3u}) {
        FieldSpec F = make_field(q);
        for (uint32_t d = 1; d <= 2; ++d) {
            Int count = int_pow(Int(q), d);
            for (Int enc = 0; enc < count; ++enc) {
                Poly f = poly_from_encoding(F, d, enc);
                auto D = make_carlitz_datum(F, f);
                // S = ramified places, T = first place outside S
                std::vector<Place> S = D.ramified_places();
                if (S.empty()) S.push_back(Place::infinity());
                std::vector<Place> T;
                for (const auto& v : enumerate_places(F, 2, true)) {
                    bool in = false;
                    for (const auto& s : S) in = in || s == v;
                    if (!in) { T.push_back(v); break; }
                }
                PlaceSets sets(S, T);
                auto r = theta_element(D, sets);
                REQUIRE(r.stabilized);
                REQUIRE(r.bound_used >= 2 * r.degree);
            }
        }
    }
}
