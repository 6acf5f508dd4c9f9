// Copyright 2026 The ffiwa authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "ffiwa/augmentation.hpp"
#include "ffiwa/groupring.hpp"

using namespace ffiwa;

namespace {

GroupRing<ZRing> pseudo_random_elem(const AbelianGroup& G, int seed) {
    GroupRing<ZRing> x(ZRing{}, G);
    for (uint64_t i = 0; i < G.order(); ++i)
        x.c[i] = Int((seed * 31 + int(i) * 17) % 11 - 5);
    return x;
}

}  // namespace

TEST_CASE("group ring axioms on random triples") {
    AbelianGroup G({2, 4});
    for (int s = 0; s < 200; ++s) {
        auto a = pseudo_random_elem(G, s);
        auto b = pseudo_random_elem(G, s + 1000);
        auto c = pseudo_random_elem(G, s + 2000);
        REQUIRE(gr_mul(a, b) == gr_mul(b, a));
        REQUIRE(gr_mul(gr_mul(a, b), c) == gr_mul(a, gr_mul(b, c)));
        REQUIRE(gr_mul(a, gr_add(b, c)) == gr_add(gr_mul(a, b), gr_mul(a, c)));
    }
}

TEST_CASE("group ring axioms over Z/p^N") {
    AbelianGroup G({3});
    ZModRing R(int_pow(Int(3), 5));
    for (int s = 0; s < 50; ++s) {
        GroupRing<ZModRing> a(R, G), b(R, G);
        for (uint64_t i = 0; i < 3; ++i) {
            a.c[i] = mod_pos(Int(s * 7 + int(i) * 5), R.m);
            b.c[i] = mod_pos(Int(s * 13 + int(i) * 3 + 1), R.m);
        }
        REQUIRE(gr_mul(a, b) == gr_mul(b, a));
    }
}

TEST_CASE("evaluate_character spec values") {
    AbelianGroup G({2});
    auto chars = characters(G);
    const Character& triv = chars[0];
    const Character& sgn = chars[1];

    // identity element evaluates to 1 under any character
    auto one = GroupRing<ZRing>::one(ZRing{}, G);
    REQUIRE(evaluate_character(one, triv) == IntPoly{1});
    REQUIRE(evaluate_character(one, sgn) == IntPoly{1});

    // sum over G evaluates to 0 under a nontrivial character
    GroupRing<ZRing> all(ZRing{}, G);
    all.c = {1, 1};
    REQUIRE(evaluate_character(all, sgn).empty());

    // x = 3*1 + 5*sigma, phi(sigma) = -1  ->  -2
    GroupRing<ZRing> x(ZRing{}, G);
    x.c = {3, 5};
    REQUIRE(evaluate_character(x, sgn) == IntPoly{-2});
}

TEST_CASE("character evaluation is a ring homomorphism") {
    AbelianGroup G({4});
    auto chars = characters(G);
    for (const auto& phi : chars) {
        CycloRing R(phi.order());
        for (int s = 0; s < 20; ++s) {
            auto a = pseudo_random_elem(G, s);
            auto b = pseudo_random_elem(G, s + 7);
            IntPoly lhs = evaluate_character(gr_mul(a, b), phi);
            IntPoly rhs = R.mul(evaluate_character(a, phi), evaluate_character(b, phi));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("projection is a ring homomorphism and commutes with inflation") {
    AbelianGroup G({4});
    auto P = quotient_by(G, {GrpElem{2}});  // Z/4 -> Z/2
    REQUIRE(P.target.divisors == std::vector<uint64_t>({2}));
    for (int s = 0; s < 30; ++s) {
        auto a = pseudo_random_elem(G, s);
        auto b = pseudo_random_elem(G, s + 3);
        REQUIRE(project_group_ring(gr_mul(a, b), P) ==
                gr_mul(project_group_ring(a, P), project_group_ring(b, P)));
    }
    // spec example: (1+sigma)(1-sigma) projects consistently
    GroupRing<ZRing> x(ZRing{}, G), y(ZRing{}, G);
    x.c = {1, 1, 0, 0};   // 1 + sigma
    y.c = {1, -1, 0, 0};  // 1 - sigma
    REQUIRE(project_group_ring(gr_mul(x, y), P) ==
            gr_mul(project_group_ring(x, P), project_group_ring(y, P)));
    // inflation: evaluating a character of G/H on the projection equals
    // evaluating its pullback on the original element
    auto qchars = characters(P.target);
    for (const auto& psi : qchars) {
        Character pulled;
        pulled.target_order = G.exponent();
        pulled.exps.resize(1);
        GrpElem gen{1};
        uint64_t k = psi.exponent_on(P.target, P.apply(gen));
        pulled.exps[0] = k * (G.exponent() / psi.target_order);
        for (int s = 0; s < 10; ++s) {
            auto a = pseudo_random_elem(G, s);
            IntPoly lhs = evaluate_character(project_group_ring(a, P), psi);
            IntPoly rhs = evaluate_character(a, pulled);
            REQUIRE(lhs == rhs);
        }
    }
    // projection to the full quotient is the augmentation map
    auto Pfull = quotient_by(G, {GrpElem{1}});
    for (int s = 0; s < 5; ++s) {
        auto a = pseudo_random_elem(G, s);
        auto proj = project_group_ring(a, Pfull);
        REQUIRE(proj.c[0] == a.augmentation());
    }
}

TEST_CASE("augmentation analysis: sigma - 1 in Z/p has order 1 with leading t") {
    AbelianGroup G({3});
    AugmentationFiltration filt(G, 3, 8);
    GroupRing<ZModRing> x(ZModRing(int_pow(Int(3), 8)), G);
    x.c[G.flat({1})] = 1;
    x.c[0] = x.ring.sub(x.c[0], x.ring.one());  // sigma - 1
    auto form = augmentation_analysis(filt, x, 5);
    REQUIRE(form.resolved);
    REQUIRE(form.order == 1);
    REQUIRE(form.coords.size() == 1);
    REQUIRE(form.coords[0] != 0);
    // the class is that of t itself, and differs from the class of 2t
    auto t2 = gr_add(x, x);
    auto form2 = augmentation_analysis(filt, t2, 5);
    REQUIRE(form2.order == 1);
    REQUIRE(form.coords != form2.coords);
}

TEST_CASE("augmentation analysis: sigma^2 - 1 in Z/4 (p=2) has order 1, leading 2t") {
    AbelianGroup G({4});
    AugmentationFiltration filt(G, 2, 16);
    GroupRing<ZModRing> x(ZModRing(int_pow(Int(2), 16)), G);
    x.c[G.flat({2})] = 1;                       // sigma^2
    x.c[0] = x.ring.sub(x.c[0], x.ring.one());  // - 1
    auto form = augmentation_analysis(filt, x, 6);
    REQUIRE(form.resolved);
    REQUIRE(form.order == 1);
    // the class equals that of 2t where t = sigma - 1
    GroupRing<ZModRing> t(ZModRing(int_pow(Int(2), 16)), G);
    t.c[G.flat({1})] = 1;
    t.c[0] = t.ring.sub(t.c[0], t.ring.one());
    auto t2 = gr_add(t, t);
    auto form2t = augmentation_analysis(filt, t2, 6);
    REQUIRE(form2t.order == 1);
    REQUIRE(form.coords == form2t.coords);
    REQUIRE(filt.contains(gr_sub(x, t2), 2));
}

TEST_CASE("augmentation analysis: zero is flagged") {
    AbelianGroup G({2});
    AugmentationFiltration filt(G, 2, 8);
    GroupRing<ZModRing> x(ZModRing(int_pow(Int(2), 8)), G);
    auto form = augmentation_analysis(filt, x, 4);
    REQUIRE(!form.resolved);
}

TEST_CASE("filtration multiplicativity: order(x*y) >= order(x) + order(y)") {
    AbelianGroup G({2, 4});
    AugmentationFiltration filt(G, 2, 20);
    ZModRing R(int_pow(Int(2), 20));
    for (int s = 1; s < 15; ++s) {
        GroupRing<ZModRing> x(R, G), y(R, G);
        for (uint64_t i = 0; i < G.order(); ++i) {
            x.c[i] = mod_pos(Int(s * 3 + int(i)), R.m);
            y.c[i] = mod_pos(Int(s * 5 + 2 * int(i) + 1), R.m);
        }
        // force both into I by subtracting the augmentation
        x.c[0] = R.sub(x.c[0], x.augmentation());
        y.c[0] = R.sub(y.c[0], y.augmentation());
        auto fx = augmentation_analysis(filt, x, 6);
        auto fy = augmentation_analysis(filt, y, 6);
        if (!fx.resolved || !fy.resolved) continue;
        auto fxy = augmentation_analysis(filt, gr_mul(x, y), 6);
        int got = fxy.resolved ? fxy.order : fxy.order + 1;
        REQUIRE(got >= fx.order + fy.order);
    }
}

TEST_CASE("series arithmetic and binomial factors") {
    AbelianGroup G({2});
    auto s = GroupRingSeries<ZRing>::one(ZRing{}, G, 8);
    // multiply by (1 - [g] u)^{-1} then by (1 - [g] u): back to 1
    GrpElem g{1};
    s.mul_binomial_power(g, 1, Int(1), Int(1), -1);
    for (int j = 1; j <= 8; ++j)
        REQUIRE(s.coef[size_t(j)].c[G.flat(G.smul(j, g))] == 1);
    s.mul_binomial_power(g, 1, Int(1), Int(1), +1);
    auto one = GroupRingSeries<ZRing>::one(ZRing{}, G, 8);
    REQUIRE(s == one);
    // (1 - u)^{-3} has coefficients binom(j+2, 2) at the identity
    auto t = GroupRingSeries<ZRing>::one(ZRing{}, G, 8);
    t.mul_binomial_power(G.identity(), 1, Int(1), Int(3), -1);
    for (int j = 0; j <= 8; ++j)
        REQUIRE(t.coef[size_t(j)].c[0] == binomial(Int(j + 2), 2));
}
