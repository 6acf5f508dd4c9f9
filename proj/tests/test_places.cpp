// Copyright 2026 The ffiwa authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "ffiwa/place.hpp"

using namespace ffiwa;

namespace {

// Independent oracle: necklace count of monic irreducibles of degree n.
Int necklace(uint64_t q, uint32_t n) {
    Int s = 0;
    for (uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) s += Int(moebius(n / d)) * int_pow(Int(q), d);
    return s / n;
}

}  // namespace

TEST_CASE("place enumeration over F2 up to degree 3") {
    FieldSpec F = make_field(2);
    auto places = enumerate_places(F, 3, true);
    REQUIRE(places.size() == 6);
    REQUIRE(places[0].infinite);
    REQUIRE(place_to_string(places[1]) == "T");
    REQUIRE(place_to_string(places[2]) == "T+1");
    REQUIRE(place_to_string(places[3]) == "T^2+T+1");
    REQUIRE(place_to_string(places[4]) == "T^3+T+1");
    REQUIRE(place_to_string(places[5]) == "T^3+T^2+1");
}

TEST_CASE("degree-1 places over F2 without infinity") {
    FieldSpec F = make_field(2);
    auto places = enumerate_places(F, 1, false);
    REQUIRE(places.size() == 2);
    REQUIRE(place_to_string(places[0]) == "T");
    REQUIRE(place_to_string(places[1]) == "T+1");
}

TEST_CASE("place counts match the necklace formula") {
    for (uint32_t q : {2u, 3u, 4u, 5u}) {
        FieldSpec F = q == 4 ? make_field(2, 2) : make_field(q);
        auto places = enumerate_places(F, 6, false);
        std::map<uint32_t, Int> by_degree;
        for (const auto& v : places) by_degree[v.degree()] += 1;
        for (uint32_t d = 1; d <= 6; ++d) REQUIRE(by_degree[d] == necklace(q, d));
    }
}

TEST_CASE("F3 places of degree <= 2") {
    FieldSpec F = make_field(3);
    auto places = enumerate_places(F, 2, false);
    size_t deg1 = 0, deg2 = 0;
    for (const auto& v : places) (v.degree() == 1 ? deg1 : deg2)++;
    REQUIRE(deg1 == 3);
    REQUIRE(deg2 == 3);
}

TEST_CASE("enumeration is deterministic and sorted") {
    FieldSpec F = make_field(3);
    auto a = enumerate_places(F, 4, true);
    auto b = enumerate_places(F, 4, true);
    REQUIRE(a == b);
    for (size_t i = 1; i < a.size(); ++i) REQUIRE(a[i - 1] < a[i]);
}

TEST_CASE("ord_at on simple functions") {
    FieldSpec F = make_field(2);
    RatFunc t2(poly_from_string(F, "T^2"));
    REQUIRE(ord_at(F, Place::finite(Poly::T()), t2) == 2);
    REQUIRE(ord_at(F, Place::infinity(), t2) == -2);
    // ord at T^2+T+1 of T^3+1 = (T+1)(T^2+T+1): oracle by trial factorization
    RatFunc f(poly_from_string(F, "T^3+1"));
    REQUIRE(ord_at(F, Place::finite(poly_from_string(F, "T^2+T+1")), f) == 1);
}

TEST_CASE("degree-sum law for random rational functions") {
    FieldSpec F = make_field(3);
    // deterministic pseudo-random polynomials via encodings
    for (int trial = 0; trial < 100; ++trial) {
        Int ne = Int(trial) * 37 + 11;
        Int de = Int(trial) * 53 + 5;
        Poly num = poly_from_encoding(F, 3 + trial % 3, ne);
        Poly den = poly_from_encoding(F, 1 + trial % 4, de);
        RatFunc f(F, num, den);
        if (f.is_zero()) continue;
        long total = 0;
        uint32_t maxdeg = uint32_t(std::max({f.num.deg(), f.den.deg(), 1}));
        for (const auto& v : enumerate_places(F, maxdeg, true))
            total += ord_at(F, v, f) * long(v.degree());
        REQUIRE(total == 0);
    }
}

TEST_CASE("place parsing round trip and rejection") {
    FieldSpec F = make_field(2);
    REQUIRE(place_from_string(F, "inf").infinite);
    REQUIRE(place_to_string(place_from_string(F, "T^3+T+1")) == "T^3+T+1");
    REQUIRE_THROWS_AS(place_from_string(F, "T^"), UsageError);
    REQUIRE_THROWS_AS(place_from_string(F, "T^2+1"), UsageError);     // (T+1)^2
    REQUIRE_THROWS_AS(poly_from_string(F, "T+"), UsageError);
}

TEST_CASE("irreducible counts by residue class agree with direct enumeration") {
    FieldSpec F = make_field(2);
    Poly f = poly_from_string(F, "T^2");
    auto cc = count_irreducibles_by_class(F, f, 8);
    // direct enumeration oracle
    std::map<Poly, std::vector<Int>> direct;
    for (const auto& cls : cc.classes) direct[cls] = std::vector<Int>(8, 0);
    for (const auto& v : enumerate_places(F, 8, false)) {
        Poly r = poly_mod(F, v.prime, f);
        if (poly_gcd(F, r, f).is_one()) direct[r][v.degree() - 1] += 1;
    }
    for (size_t i = 0; i < cc.classes.size(); ++i)
        for (uint32_t d = 1; d <= 8; ++d)
            REQUIRE(cc.counts[d - 1][i] == direct[cc.classes[i]][d - 1]);
    // and the total per degree matches the necklace count minus places dividing f
    for (uint32_t d = 1; d <= 8; ++d) {
        Int tot = 0;
        for (size_t i = 0; i < cc.classes.size(); ++i) tot += cc.counts[d - 1][i];
        Int expect = necklace(2, d);
        if (d == 1) expect -= 1;  // the place T divides f
        REQUIRE(tot == expect);
    }
}

TEST_CASE("irreducible counts by class over F3 with an irreducible modulus") {
    FieldSpec F = make_field(3);
    Poly f = poly_from_string(F, "T^2+1");
    auto cc = count_irreducibles_by_class(F, f, 6);
    std::map<Poly, std::vector<Int>> direct;
    for (const auto& cls : cc.classes) direct[cls] = std::vector<Int>(6, 0);
    for (const auto& v : enumerate_places(F, 6, false)) {
        Poly r = poly_mod(F, v.prime, f);
        if (poly_gcd(F, r, f).is_one()) direct[r][v.degree() - 1] += 1;
    }
    for (size_t i = 0; i < cc.classes.size(); ++i)
        for (uint32_t d = 1; d <= 6; ++d)
            REQUIRE(cc.counts[d - 1][i] == direct[cc.classes[i]][d - 1]);
}
