// Copyright 2026 The ffiwa authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "ffiwa/extension.hpp"

using namespace ffiwa;

TEST_CASE("unit group structure: spec examples") {
    FieldSpec F2 = make_field(2);
    // (F_2[T]/T)^x is trivial
    auto u1 = unit_group_structure(F2, poly_from_string(F2, "T"));
    REQUIRE(u1.group.order() == 1);
    // (F_2[T]/T^2)^x is cyclic of order 2 generated by T+1
    auto u2 = unit_group_structure(F2, poly_from_string(F2, "T^2"));
    REQUIRE(u2.group.divisors == std::vector<uint64_t>({2}));
    REQUIRE(u2.generators.size() == 1);
    REQUIRE(u2.generators[0] == poly_from_string(F2, "T+1"));
    // (F_2[T]/(T^2+T+1))^x is cyclic of order 3
    auto u3 = unit_group_structure(F2, poly_from_string(F2, "T^2+T+1"));
    REQUIRE(u3.group.divisors == std::vector<uint64_t>({3}));
}

TEST_CASE("unit group structure: dlog is a homomorphism") {
    FieldSpec F3 = make_field(3);
    Poly f = poly_from_string(F3, "T^3");
    auto u = unit_group_structure(F3, f);
    REQUIRE(u.group.order() == 18);  // 3^2 * 2
    for (const auto& [a, da] : u.dlog)
        for (const auto& [b, db] : u.dlog) {
            Poly ab = poly_mod(F3, poly_mul(F3, a, b), f);
            REQUIRE(u.dlog.at(ab) == u.group.add(da, db));
        }
}

TEST_CASE("unit group size bound") {
    FieldSpec F5 = make_field(5);
    Poly big = poly_from_encoding(F5, 12, Int(1));
    REQUIRE_THROWS_AS(unit_group_structure(F5, big), ResourceError);
}

TEST_CASE("frobenius on the trivial datum is the identity") {
    FieldSpec F2 = make_field(2);
    auto D = make_trivial_datum(F2);
    for (const auto& v : enumerate_places(F2, 3, true))
        REQUIRE(D.G.is_identity(D.frobenius(v)));
}

TEST_CASE("Carlitz k(Lambda_T)/F_3: Frobenius by reduction mod T") {
    FieldSpec F3 = make_field(3);
    auto D = make_carlitz_datum(F3, poly_from_string(F3, "T"));
    REQUIRE(D.G.divisors == std::vector<uint64_t>({2}));  // (F_3[T]/T)^x = F_3^x
    // v = T+1 reduces to 1 mod T: identity
    REQUIRE(D.G.is_identity(D.frobenius(place_from_string(F3, "T+1"))));
    // v = T+2 reduces to 2 mod T: the nontrivial element
    REQUIRE(!D.G.is_identity(D.frobenius(place_from_string(F3, "T+2"))));
}

TEST_CASE("inertia: Carlitz f=T over F_3 is totally ramified at T") {
    FieldSpec F3 = make_field(3);
    auto D = make_carlitz_datum(F3, poly_from_string(F3, "T"));
    auto I = subgroup_closure(D.G, D.inertia(place_from_string(F3, "T")));
    REQUIRE(I.size() == D.G.order());
    // places coprime to the modulus (and not infinity) are unramified
    REQUIRE(D.inertia(place_from_string(F3, "T+1")).empty());
    // infinity is tamely ramified with inertia of order q-1 = 2
    auto Iinf = subgroup_closure(D.G, D.inertia(Place::infinity()));
    REQUIRE(Iinf.size() == 2);
    REQUIRE_THROWS_AS(D.frobenius(Place::infinity()), UsageError);
}

TEST_CASE("Carlitz over F_2: infinity splits completely") {
    FieldSpec F2 = make_field(2);
    auto D = make_carlitz_datum(F2, poly_from_string(F2, "T^2"));
    REQUIRE(D.G.order() == 2);
    REQUIRE(D.inertia(Place::infinity()).empty());
    REQUIRE(D.G.is_identity(D.frobenius(Place::infinity())));
    auto s = D.splitting(Place::infinity());
    REQUIRE(s.e == 1);
    REQUIRE(s.f == 1);
    REQUIRE(s.g == 2);
    // T is totally (wildly) ramified
    auto st = D.splitting(place_from_string(F2, "T"));
    REQUIRE(st.e == 2);
    REQUIRE(st.g == 1);
}

TEST_CASE("unramified place dividing the modulus gets a CRT Frobenius") {
    // Carlitz modulus T^2(T+1) over F_2 has conductor T^2; the place T+1 is
    // unramified and must be inert in the quadratic field (oracle: the field
    // is y^2+y = 1/T and Tr(h(1)) = 1).
    FieldSpec F2 = make_field(2);
    auto D = make_carlitz_datum(F2, poly_from_string(F2, "T^3+T^2"));
    REQUIRE(D.G.order() == 2);
    Place v = place_from_string(F2, "T+1");
    REQUIRE(D.inertia(v).empty());
    REQUIRE(!D.G.is_identity(D.frobenius(v)));
}

TEST_CASE("quotient datum: spec examples") {
    FieldSpec F2 = make_field(2);
    auto D = make_carlitz_datum(F2, poly_from_string(F2, "T^2+T+1"));
    REQUIRE(D.G.divisors == std::vector<uint64_t>({3}));
    // H = G: trivial datum
    auto [Q1, P1] = quotient_datum(D, {GrpElem{1}});
    REQUIRE(Q1.G.order() == 1);
    // H = {0}: identical datum (isomorphic groups, same Frobenii)
    auto [Q2, P2] = quotient_datum(D, {});
    REQUIRE(Q2.G.order() == 3);
    for (const auto& v : enumerate_places(F2, 4, true)) {
        if (Q2.is_ramified(v)) continue;
        REQUIRE(P2.apply(D.frobenius(v)) == Q2.frobenius(v));
    }
}

TEST_CASE("frobenius commutes with projection for unramified places of degree <= 4") {
    FieldSpec F3 = make_field(3);
    auto D = make_carlitz_datum(F3, poly_from_string(F3, "T^2"));
    REQUIRE(D.G.order() == 6);
    // quotient to the p-part Z/3
    auto [Q, P] = quotient_datum(D, {D.G.smul(3, GrpElem{3 % D.G.divisors[0]})});
    // pick the subgroup of order 2: generated by 3*g where g generates Z/6
    std::vector<GrpElem> h{D.G.smul(3, GrpElem{1})};
    auto [Q3, P3] = quotient_datum(D, h);
    REQUIRE(Q3.G.order() == 3);
    for (const auto& v : enumerate_places(F3, 4, true)) {
        if (D.is_ramified(v) || Q3.is_ramified(v)) continue;
        REQUIRE(P3.apply(D.frobenius(v)) == Q3.frobenius(v));
    }
}

TEST_CASE("Artin reciprocity closure on principal polynomials") {
    // For 50 monic a coprime to f, the finite-place Frobenius product
    // [w]^{ord_w(a)} equals the image of (a mod f, 1, deg a); the infinity
    // and f-unit local contributions are its inverse by construction.
    FieldSpec F2 = make_field(2);
    auto D = make_carlitz_datum(F2, poly_from_string(F2, "T^3+T^2"));
    int checked = 0;
    for (Int enc = 0; checked < 50 && enc < 256; ++enc) {
        for (uint32_t d = 3; d <= 5 && checked < 50; ++d) {
            Poly a = poly_from_encoding(F2, d, enc);
            if (poly_gcd(F2, a, D.modulus_f).deg() != 0) continue;
            GrpElem lhs = D.G.identity();
            for (const auto& [P, e] : poly_factor(F2, a))
                lhs = D.G.add(lhs, D.G.smul(Int(e), D.frobenius_lift(Place::finite(P))));
            GrpElem rhs = D.G.add(D.unit_image(a),
                                  D.G.smul(Int(a.deg()), D.degree_image()));
            REQUIRE(lhs == rhs);
            ++checked;
        }
    }
    REQUIRE(checked == 50);
}

TEST_CASE("reciprocity closure with tame infinity (q = 3)") {
    FieldSpec F3 = make_field(3);
    auto D = make_carlitz_datum(F3, poly_from_string(F3, "T^2"));
    int checked = 0;
    for (Int enc = 0; checked < 30 && enc < 243; ++enc) {
        Poly a = poly_from_encoding(F3, 3, enc);
        if (poly_gcd(F3, a, D.modulus_f).deg() != 0) continue;
        GrpElem lhs = D.G.identity();
        for (const auto& [P, e] : poly_factor(F3, a))
            lhs = D.G.add(lhs, D.G.smul(Int(e), D.frobenius_lift(Place::finite(P))));
        GrpElem rhs = D.G.add(D.unit_image(a), D.G.smul(Int(a.deg()), D.degree_image()));
        REQUIRE(lhs == rhs);
        ++checked;
    }
    REQUIRE(checked == 30);
}

TEST_CASE("constant datum: Frobenius is the degree") {
    FieldSpec F2 = make_field(2);
    auto D = make_constant_datum(F2, 4);
    REQUIRE(D.constant_degree() == 4);
    for (const auto& v : enumerate_places(F2, 4, true)) {
        GrpElem fr = D.frobenius(v);
        REQUIRE(fr == GrpElem{v.degree() % 4});
    }
    auto carlitz = make_carlitz_datum(F2, poly_from_string(F2, "T^2"));
    REQUIRE(carlitz.constant_degree() == 1);
}

TEST_CASE("datum validation rejects bad image tables") {
    FieldSpec F3 = make_field(3);
    auto D = make_carlitz_datum(F3, poly_from_string(F3, "T"));
    // break the surjectivity: send everything to the identity
    ExtensionDatum bad = D;
    for (auto& img : bad.unit_gen_images) img = bad.G.identity();
    bad.tame_image = bad.G.identity();
    bad.degree_img = bad.G.identity();
    REQUIRE_THROWS_AS(bad.validate(), UsageError);
}
