// Copyright 2026 The ffiwa authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "ffiwa/field.hpp"
#include "ffiwa/place.hpp"
#include "ffiwa/poly.hpp"

using namespace ffiwa;

TEST_CASE("prime field arithmetic") {
    FieldSpec F = make_field(5);
    REQUIRE(F.q == 5);
    REQUIRE(gf_add(F, 3, 4) == 2);
    REQUIRE(gf_mul(F, 3, 4) == 2);
    REQUIRE(gf_inv(F, 2) == 3);
    for (GF a = 1; a < 5; ++a) REQUIRE(gf_mul(F, a, gf_inv(F, a)) == 1);
}

TEST_CASE("F4 is built with modulus x^2+x+1 and behaves like a field") {
    FieldSpec F = make_field(2, 2);
    REQUIRE(F.q == 4);
    REQUIRE(F.modulus == std::vector<uint32_t>({1, 1, 1}));
    // alpha = encoding 2 (the class of x): alpha^2 = alpha + 1 = encoding 3
    REQUIRE(gf_mul(F, 2, 2) == 3);
    REQUIRE(gf_order(F, 2) == 3);
    // field axioms by exhaustion
    for (GF a = 0; a < 4; ++a)
        for (GF b = 0; b < 4; ++b) {
            REQUIRE(gf_add(F, a, b) == gf_add(F, b, a));
            REQUIRE(gf_mul(F, a, b) == gf_mul(F, b, a));
            for (GF c = 0; c < 4; ++c)
                REQUIRE(gf_mul(F, a, gf_add(F, b, c)) ==
                        gf_add(F, gf_mul(F, a, b), gf_mul(F, a, c)));
        }
}

TEST_CASE("extension field embedding fixes the base under Frobenius") {
    // make_extension_field(F_3, 2): field of order 9; embedding commutes with
    // arithmetic, and x -> x^3 fixes exactly the embedded base field.
    FieldSpec F3 = make_field(3);
    ExtField E = make_extension_field(F3, 2);
    REQUIRE(E.field.q == 9);
    std::set<GF> fixed;
    for (GF a = 0; a < 9; ++a)
        if (gf_pow(E.field, a, 3) == a) fixed.insert(a);
    std::set<GF> embedded;
    for (GF a = 0; a < 3; ++a) embedded.insert(E.embed(a));
    REQUIRE(fixed == embedded);
    for (GF a = 0; a < 3; ++a)
        for (GF b = 0; b < 3; ++b) {
            REQUIRE(E.embed(gf_add(F3, a, b)) == gf_add(E.field, E.embed(a), E.embed(b)));
            REQUIRE(E.embed(gf_mul(F3, a, b)) == gf_mul(E.field, E.embed(a), E.embed(b)));
        }
}

TEST_CASE("extension of F2 by degree 1 and 2") {
    FieldSpec F2 = make_field(2);
    ExtField E1 = make_extension_field(F2, 1);
    REQUIRE(E1.field.q == 2);
    ExtField E2 = make_extension_field(F2, 2);
    REQUIRE(E2.field.q == 4);
    REQUIRE(E2.field.modulus == std::vector<uint32_t>({1, 1, 1}));
}

TEST_CASE("trace to the prime field") {
    FieldSpec F4 = make_field(2, 2);
    // Tr(0)=0, Tr(1)=0, Tr(alpha)=alpha+alpha^2=1, Tr(alpha+1)=1
    REQUIRE(gf_trace(F4, 0) == 0);
    REQUIRE(gf_trace(F4, 1) == 0);
    REQUIRE(gf_trace(F4, 2) == 1);
    REQUIRE(gf_trace(F4, 3) == 1);
}

TEST_CASE("polynomial division, gcd and factorization") {
    FieldSpec F = make_field(2);
    Poly f = poly_from_string(F, "T^3+1");
    auto factors = poly_factor(F, f);
    // T^3+1 = (T+1)(T^2+T+1) over F_2
    REQUIRE(factors.size() == 2);
    REQUIRE(factors[0].first == poly_from_string(F, "T+1"));
    REQUIRE(factors[0].second == 1);
    REQUIRE(factors[1].first == poly_from_string(F, "T^2+T+1"));
    REQUIRE(factors[1].second == 1);

    Poly g = poly_from_string(F, "T^4+T^2");  // T^2 (T+1)^2
    auto fg = poly_factor(F, g);
    REQUIRE(fg.size() == 2);
    REQUIRE(fg[0].second == 2);
    REQUIRE(fg[1].second == 2);

    REQUIRE(poly_gcd(F, f, g) == poly_from_string(F, "T+1"));
}

TEST_CASE("irreducibility by the gcd criterion agrees with trial division") {
    FieldSpec F = make_field(2);
    // degree 9 and 10 candidates checked against brute-force divisor search
    for (Int enc = 0; enc < 64; ++enc) {
        for (uint32_t d : {9u, 10u}) {
            Poly f = poly_from_encoding(F, d, enc);
            bool fast = poly_is_irreducible(F, f);
            bool slow = true;
            for (uint32_t dd = 1; 2 * dd <= d && slow; ++dd) {
                Int cnt = int_pow(Int(2), dd);
                for (Int e2 = 0; e2 < cnt; ++e2)
                    if (poly_mod(F, f, poly_from_encoding(F, dd, e2)).is_zero()) {
                        slow = false;
                        break;
                    }
            }
            REQUIRE(fast == slow);
        }
    }
}

TEST_CASE("extended gcd identity") {
    FieldSpec F = make_field(3);
    Poly a = poly_from_string(F, "T^4+2T+1");
    Poly b = poly_from_string(F, "T^2+T");
    auto [g, s, t] = poly_xgcd(F, a, b);
    Poly lhs = poly_add(F, poly_mul(F, s, a), poly_mul(F, t, b));
    REQUIRE(lhs == g);
    REQUIRE(poly_mod(F, a, g).is_zero());
    REQUIRE(poly_mod(F, b, g).is_zero());
}

TEST_CASE("rational function normalization") {
    FieldSpec F = make_field(2);
    RatFunc r(F, poly_from_string(F, "T^3+1"), poly_from_string(F, "T^2+1"));
    // (T+1)(T^2+T+1) / (T+1)^2 = (T^2+T+1)/(T+1)
    REQUIRE(r.num == poly_from_string(F, "T^2+T+1"));
    REQUIRE(r.den == poly_from_string(F, "T+1"));
}
