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

#ifndef FFIWA_POLY_HPP
#define FFIWA_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace ffiwa {

/// Polynomial over F_q in the variable T, canonical form (no trailing zero
/// coefficients).  The degree of the zero polynomial is -1.
struct Poly {
    std::vector<GF> c;  // c[i] = coefficient of T^i

    Poly() = default;
    explicit Poly(std::vector<GF> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    GF lead() const { return c.empty() ? 0 : c.back(); }
    GF coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const {  // by degree, then encoding
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({1}); }
    static Poly T() { return Poly({0, 1}); }
    static Poly constant(GF a) { return a ? Poly({a}) : Poly(); }
};

inline Poly poly_add(const FieldSpec& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = gf_add(F, a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

inline Poly poly_neg(const FieldSpec& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = gf_neg(F, x);
    return r;
}

inline Poly poly_sub(const FieldSpec& F, const Poly& a, const Poly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

inline Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j]) r.c[i + j] = gf_add(F, r.c[i + j], gf_mul(F, a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

inline Poly poly_scale(const FieldSpec& F, const Poly& a, GF s) {
    if (s == 0) return Poly();
    Poly r = a;
    for (auto& x : r.c) x = gf_mul(F, x, s);
    return r;
}

/// Division with remainder: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    Poly rem = a, quot;
    quot.c.assign(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, 0);
    GF inv_lead = gf_inv(F, b.lead());
    while (rem.deg() >= b.deg()) {
        GF f = gf_mul(F, rem.lead(), inv_lead);
        size_t shift = size_t(rem.deg() - b.deg());
        quot.c[shift] = f;
        for (size_t i = 0; i < b.c.size(); ++i)
            rem.c[shift + i] = gf_sub(F, rem.c[shift + i], gf_mul(F, f, b.c[i]));
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

inline Poly poly_mod(const FieldSpec& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}

inline Poly poly_monic(const FieldSpec& F, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, a, gf_inv(F, a.lead()));
}

inline Poly poly_gcd(const FieldSpec& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = b;
        b = r;
    }
    return poly_monic(F, a);
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g (g monic or zero).
inline std::tuple<Poly, Poly, Poly> poly_xgcd(const FieldSpec& F, const Poly& a, const Poly& b) {
    Poly old_r = a, r = b;
    Poly old_s = Poly::one(), s = Poly::zero();
    Poly old_t = Poly::zero(), t = Poly::one();
    while (!r.is_zero()) {
        auto [q, rem] = poly_divmod(F, old_r, r);
        old_r = r; r = rem;
        Poly ns = poly_sub(F, old_s, poly_mul(F, q, s));
        old_s = s; s = ns;
        Poly nt = poly_sub(F, old_t, poly_mul(F, q, t));
        old_t = t; t = nt;
    }
    if (!old_r.is_zero()) {
        GF inv = gf_inv(F, old_r.lead());
        old_r = poly_scale(F, old_r, inv);
        old_s = poly_scale(F, old_s, inv);
        old_t = poly_scale(F, old_t, inv);
    }
    return {old_r, old_s, old_t};
}

inline Poly poly_pow_mod(const FieldSpec& F, Poly base, Int e, const Poly& mod) {
    Poly r = poly_mod(F, Poly::one(), mod);
    base = poly_mod(F, base, mod);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mod(F, poly_mul(F, r, base), mod);
        base = poly_mod(F, poly_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

inline GF poly_eval(const FieldSpec& F, const Poly& a, GF x) {
    GF acc = 0;
    for (size_t i = a.c.size(); i-- > 0;) acc = gf_add(F, gf_mul(F, acc, x), a.c[i]);
    return acc;
}

/// Evaluates at a point of an extension field (coefficients embedded first).
inline GF poly_eval_ext(const FieldSpec& F, const ExtField& E, const Poly& a, GF x) {
    GF acc = 0;
    for (size_t i = a.c.size(); i-- > 0;)
        acc = gf_add(E.field, gf_mul(E.field, acc, x), E.embed(a.c[i]));
    (void)F;
    return acc;
}

/// Monic polynomial of degree d whose non-leading coefficient vector has
/// base-q value `enc`; this defines the canonical enumeration order.
inline Poly poly_from_encoding(const FieldSpec& F, uint32_t d, Int enc) {
    std::vector<GF> c(d + 1, 0);
    for (uint32_t i = 0; i < d; ++i) {
        c[i] = GF(enc % F.q);
        enc /= F.q;
    }
    c[d] = 1;
    return Poly(std::move(c));
}

inline Int poly_encoding(const FieldSpec& F, const Poly& a) {
    Int enc = 0;
    for (size_t i = a.c.size() - 1; i-- > 0;) enc = enc * F.q + a.c[i];
    return enc;
}

/// Irreducibility test.  Degree <= 8 uses exhaustive trial division by monic
/// polynomials up to half the degree; larger degrees use the x^{q^d} - x gcd
/// criterion.
inline bool poly_is_irreducible(const FieldSpec& F, const Poly& f) {
    int d = f.deg();
    if (d <= 0) return false;
    if (d == 1) return true;
    if (d <= 8) {
        for (int dd = 1; 2 * dd <= d; ++dd) {
            Int count = int_pow(Int(F.q), uint32_t(dd));
            for (Int enc = 0; enc < count; ++enc) {
                Poly div = poly_from_encoding(F, uint32_t(dd), enc);
                if (poly_mod(F, f, div).is_zero()) return false;
            }
        }
        return true;
    }
    // f irreducible iff x^{q^d} = x mod f and gcd(x^{q^{d/l}} - x, f) = 1
    // for every prime l dividing d.
    Poly x = Poly::T();
    Poly xq = x;
    std::vector<Poly> powers(d + 1);  // powers[j] = x^{q^j} mod f
    powers[0] = poly_mod(F, x, f);
    for (int j = 1; j <= d; ++j)
        powers[j] = poly_pow_mod(F, powers[j - 1], Int(F.q), f);
    if (powers[d] != powers[0]) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0 || !is_prime_u64(uint64_t(l))) continue;
        Poly diff = poly_sub(F, powers[d / l], powers[0]);
        if (poly_gcd(F, diff, f).deg() > 0) return false;
    }
    return true;
}

/// Factorization into monic irreducible powers by trial division in
/// enumeration order.  Intended for desk-scale inputs.
inline std::vector<std::pair<Poly, int>> poly_factor(const FieldSpec& F, Poly f) {
    if (f.is_zero()) throw UsageError("cannot factor zero");
    std::vector<std::pair<Poly, int>> out;
    f = poly_monic(F, f);
    uint32_t d = 1;
    while (f.deg() > 0) {
        if (2 * int(d) > f.deg()) {
            // every remaining prime factor has degree >= d, so f is irreducible
            out.emplace_back(f, 1);
            break;
        }
        Int count = int_pow(Int(F.q), d);
        for (Int enc = 0; enc < count && 2 * int(d) <= f.deg(); ++enc) {
            Poly cand = poly_from_encoding(F, d, enc);
            int mult = 0;
            while (true) {
                auto [q, r] = poly_divmod(F, f, cand);
                if (!r.is_zero()) break;
                f = q;
                ++mult;
            }
            if (mult) out.emplace_back(cand, mult);
        }
        if (f.deg() == 0) break;
        ++d;
    }
    return out;
}

/// Rational function over F_q in canonical form: denominator monic,
/// gcd(num, den) = 1.  The zero function has num = 0, den = 1.
struct RatFunc {
    Poly num;
    Poly den = Poly::one();

    RatFunc() = default;
    RatFunc(const FieldSpec& F, Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
        normalize(F);
    }
    explicit RatFunc(Poly n) : num(std::move(n)) {}

    void normalize(const FieldSpec& F) {
        if (den.is_zero()) throw UsageError("rational function with zero denominator");
        if (num.is_zero()) { den = Poly::one(); return; }
        Poly g = poly_gcd(F, num, den);
        if (g.deg() > 0) {
            num = poly_divmod(F, num, g).first;
            den = poly_divmod(F, den, g).first;
        }
        GF lead_inv = gf_inv(F, den.lead());
        num = poly_scale(F, num, lead_inv);
        den = poly_scale(F, den, lead_inv);
    }
    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
};

inline RatFunc rf_add(const FieldSpec& F, const RatFunc& a, const RatFunc& b) {
    return RatFunc(F, poly_add(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den)),
                   poly_mul(F, a.den, b.den));
}

inline RatFunc rf_sub(const FieldSpec& F, const RatFunc& a, const RatFunc& b) {
    return RatFunc(F, poly_sub(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den)),
                   poly_mul(F, a.den, b.den));
}

inline RatFunc rf_mul(const FieldSpec& F, const RatFunc& a, const RatFunc& b) {
    return RatFunc(F, poly_mul(F, a.num, b.num), poly_mul(F, a.den, b.den));
}

inline RatFunc rf_inv(const FieldSpec& F, const RatFunc& a) {
    if (a.is_zero()) throw UsageError("inverse of zero rational function");
    return RatFunc(F, a.den, a.num);
}

inline RatFunc rf_pow(const FieldSpec& F, RatFunc a, long n) {
    if (n < 0) { a = rf_inv(F, a); n = -n; }
    RatFunc r{Poly::one()};
    while (n) {
        if (n & 1) r = rf_mul(F, r, a);
        a = rf_mul(F, a, a);
        n >>= 1;
    }
    return r;
}

}  // namespace ffiwa

#endif
