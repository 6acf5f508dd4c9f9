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

#ifndef FFIWA_GROUPRING_HPP
#define FFIWA_GROUPRING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "cyclotomic.hpp"

namespace ffiwa {

/// Coefficient ring Z (exact integers).
struct ZRing {
    using Elem = Int;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const Int& n) const { return n; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    std::string to_string(const Elem& a) const { return a.str(); }
};

/// Coefficient ring Z/m (m typically p^N).
struct ZModRing {
    Int m;
    explicit ZModRing(Int modulus = Int(2)) : m(std::move(modulus)) {
        if (m < 2) throw UsageError("modulus must be >= 2");
    }
    using Elem = Int;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const Int& n) const { return mod_pos(n, m); }
    Elem add(const Elem& a, const Elem& b) const { return mod_pos(a + b, m); }
    Elem sub(const Elem& a, const Elem& b) const { return mod_pos(a - b, m); }
    Elem mul(const Elem& a, const Elem& b) const { return mod_pos(a * b, m); }
    Elem neg(const Elem& a) const { return mod_pos(-a, m); }
    bool is_zero(const Elem& a) const { return a == 0; }
    std::string to_string(const Elem& a) const { return a.str(); }
};

/// CycloRing (from cyclotomic.hpp) already models the coefficient-ring
/// interface with Elem = IntPoly.
inline std::string cyclo_to_string(const CycloRing& R, const IntPoly& a) {
    (void)R;
    std::string s = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].str();
    }
    return s + "]";
}

/// Element of R[G] for a finite abelian group G, stored densely by flat
/// group index.  Zero coefficients are skipped on serialization so the
/// canonical external form is sparse.
template <class R>
struct GroupRing {
    R ring;
    AbelianGroup G;
    std::vector<typename R::Elem> c;

    GroupRing() = default;
    GroupRing(R r, AbelianGroup g) : ring(std::move(r)), G(std::move(g)) {
        c.assign(G.order(), ring.zero());
    }

    typename R::Elem& at(const GrpElem& g) { return c[G.flat(g)]; }
    const typename R::Elem& at(const GrpElem& g) const { return c[G.flat(g)]; }

    static GroupRing zero(R r, AbelianGroup g) { return GroupRing(std::move(r), std::move(g)); }
    static GroupRing one(R r, AbelianGroup g) {
        GroupRing x(std::move(r), std::move(g));
        x.c[0] = x.ring.one();
        return x;
    }
    /// The group element g as a ring element.
    static GroupRing monomial(R r, AbelianGroup grp, const GrpElem& g) {
        GroupRing x(std::move(r), std::move(grp));
        x.c[x.G.flat(g)] = x.ring.one();
        return x;
    }

    bool is_zero() const {
        for (const auto& a : c)
            if (!ring.is_zero(a)) return false;
        return true;
    }
    bool operator==(const GroupRing& o) const { return c == o.c; }
    bool operator!=(const GroupRing& o) const { return !(*this == o); }

    /// Augmentation: the sum of all coefficients.
    typename R::Elem augmentation() const {
        auto s = ring.zero();
        for (const auto& a : c) s = ring.add(s, a);
        return s;
    }
};

template <class R>
GroupRing<R> gr_add(const GroupRing<R>& a, const GroupRing<R>& b) {
    GroupRing<R> r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.ring.add(r.c[i], b.c[i]);
    return r;
}

template <class R>
GroupRing<R> gr_sub(const GroupRing<R>& a, const GroupRing<R>& b) {
    GroupRing<R> r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.ring.sub(r.c[i], b.c[i]);
    return r;
}

template <class R>
GroupRing<R> gr_neg(const GroupRing<R>& a) {
    GroupRing<R> r = a;
    for (auto& x : r.c) x = r.ring.neg(x);
    return r;
}

template <class R>
GroupRing<R> gr_scale(const GroupRing<R>& a, const typename R::Elem& s) {
    GroupRing<R> r = a;
    for (auto& x : r.c) x = r.ring.mul(x, s);
    return r;
}

template <class R>
GroupRing<R> gr_mul(const GroupRing<R>& a, const GroupRing<R>& b) {
    GroupRing<R> r(a.ring, a.G);
    const uint64_t n = a.G.order();
    for (uint64_t i = 0; i < n; ++i) {
        if (a.ring.is_zero(a.c[i])) continue;
        GrpElem gi = a.G.unflat(i);
        for (uint64_t j = 0; j < n; ++j) {
            if (b.ring.is_zero(b.c[j])) continue;
            uint64_t k = a.G.flat(a.G.add(gi, a.G.unflat(j)));
            r.c[k] = r.ring.add(r.c[k], a.ring.mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

/// Multiplication of a coefficient vector by the group element g (shift).
template <class R>
GroupRing<R> gr_shift(const GroupRing<R>& a, const GrpElem& g) {
    GroupRing<R> r(a.ring, a.G);
    const uint64_t n = a.G.order();
    for (uint64_t i = 0; i < n; ++i) {
        if (a.ring.is_zero(a.c[i])) continue;
        r.c[a.G.flat(a.G.add(a.G.unflat(i), g))] = a.c[i];
    }
    return r;
}

/// Converts Z[G] to Z/m[G].
inline GroupRing<ZModRing> gr_reduce_mod(const GroupRing<ZRing>& a, const Int& m) {
    GroupRing<ZModRing> r(ZModRing(m), a.G);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = mod_pos(a.c[i], m);
    return r;
}

/// Linear extension of a character to R[G] with R = Z or Z/p^N; the value
/// lives in Z[x]/(Phi_d) for d the order of the character, reduced modulo
/// p^N when the input coefficients are modular.
inline IntPoly evaluate_character(const GroupRing<ZRing>& x, const Character& phi,
                                  CycloRing* out_ring = nullptr) {
    uint64_t d = phi.order();
    uint64_t N = phi.target_order;
    CycloRing R(d);
    IntPoly acc = R.zero();
    for (uint64_t i = 0; i < x.G.order(); ++i) {
        if (x.c[i] == 0) continue;
        uint64_t k = phi.exponent_on(x.G, x.G.unflat(i));
        // k is a multiple of N/d; rescale to the order-d root of unity
        IntPoly term = R.zeta_power(k / (N / d));
        for (auto& t : term) t *= x.c[i];
        acc = ip_add(acc, term);
    }
    acc = R.reduce(std::move(acc));
    if (out_ring) *out_ring = R;
    return acc;
}

inline IntPoly evaluate_character(const GroupRing<ZModRing>& x, const Character& phi,
                                  CycloRing* out_ring = nullptr) {
    uint64_t d = phi.order();
    uint64_t N = phi.target_order;
    CycloRing R(d, x.ring.m);
    IntPoly acc = R.zero();
    for (uint64_t i = 0; i < x.G.order(); ++i) {
        if (x.c[i] == 0) continue;
        uint64_t k = phi.exponent_on(x.G, x.G.unflat(i));
        IntPoly term = R.zeta_power(k / (N / d));
        for (auto& t : term) t *= x.c[i];
        acc = ip_add(acc, term);
    }
    acc = R.reduce(std::move(acc));
    if (out_ring) *out_ring = R;
    return acc;
}

/// Pushes an element along a group surjection (sums coefficients on fibers).
template <class R>
GroupRing<R> project_group_ring(const GroupRing<R>& x, const GroupProjection& P) {
    if (!(x.G == P.source)) throw UsageError("project_group_ring: group mismatch");
    GroupRing<R> r(x.ring, P.target);
    for (uint64_t i = 0; i < x.G.order(); ++i) {
        if (x.ring.is_zero(x.c[i])) continue;
        uint64_t k = P.target.flat(P.apply(x.G.unflat(i)));
        r.c[k] = r.ring.add(r.c[k], x.c[i]);
    }
    return r;
}

/// Truncated power series over R[G] in the formal variable u.
template <class R>
struct GroupRingSeries {
    R ring;
    AbelianGroup G;
    int trunc = 0;  // coefficients 0..trunc
    std::vector<GroupRing<R>> coef;

    GroupRingSeries() = default;
    GroupRingSeries(R r, AbelianGroup g, int D) : ring(r), G(std::move(g)), trunc(D) {
        coef.assign(size_t(D) + 1, GroupRing<R>(ring, G));
    }
    static GroupRingSeries one(R r, AbelianGroup g, int D) {
        GroupRingSeries s(std::move(r), std::move(g), D);
        s.coef[0] = GroupRing<R>::one(s.ring, s.G);
        return s;
    }

    /// Multiplies in place by (1 - s*[g] u^d)^{sign*count}; sign = -1 gives the
    /// inverse Euler factor expanded as a binomial series.
    void mul_binomial_power(const GrpElem& g, uint32_t d, const typename R::Elem& s,
                            const Int& count, int sign) {
        if (count == 0 || d == 0) {
            if (d == 0) throw UsageError("factor with u-degree 0");
            return;
        }
        // factor = sum_j b_j * [g]^j * s^j * u^{jd}, truncated
        std::vector<typename R::Elem> bj;  // scalar part per j
        GrpElem gj = G.identity();
        auto spow = ring.one();
        std::vector<GrpElem> gpow;
        for (uint32_t j = 0; uint64_t(j) * d <= uint64_t(trunc); ++j) {
            Int b = sign < 0 ? binomial(count + Int(j) - 1, j)
                             : (Int(j) <= count ? binomial(count, uint64_t(j)) : Int(0));
            if (sign > 0 && (j & 1)) b = -b;
            bj.push_back(ring.mul(ring.from_int(b), spow));
            gpow.push_back(gj);
            gj = G.add(gj, g);
            spow = ring.mul(spow, s);
        }
        std::vector<GroupRing<R>> out(coef.size(), GroupRing<R>(ring, G));
        for (size_t m = 0; m < coef.size(); ++m) {
            if (coef[m].is_zero()) continue;
            for (size_t j = 0; j < bj.size() && m + j * d < out.size(); ++j) {
                if (ring.is_zero(bj[j])) continue;
                GroupRing<R> term = gr_shift(coef[m], gpow[j]);
                term = gr_scale(term, bj[j]);
                out[m + j * d] = gr_add(out[m + j * d], term);
            }
        }
        coef = std::move(out);
    }

    bool operator==(const GroupRingSeries& o) const { return coef == o.coef; }
};

template <class R>
GroupRingSeries<R> grs_mul(const GroupRingSeries<R>& a, const GroupRingSeries<R>& b) {
    GroupRingSeries<R> r(a.ring, a.G, a.trunc);
    for (int i = 0; i <= a.trunc; ++i) {
        if (a.coef[size_t(i)].is_zero()) continue;
        for (int j = 0; i + j <= a.trunc && j <= b.trunc; ++j) {
            if (b.coef[size_t(j)].is_zero()) continue;
            r.coef[size_t(i + j)] =
                gr_add(r.coef[size_t(i + j)], gr_mul(a.coef[size_t(i)], b.coef[size_t(j)]));
        }
    }
    return r;
}

/// Evaluates a series at u = 1 by summing coefficients 0..upto.
template <class R>
GroupRing<R> grs_value_at_one(const GroupRingSeries<R>& s, int upto) {
    GroupRing<R> acc(s.ring, s.G);
    for (int j = 0; j <= upto && j <= s.trunc; ++j) acc = gr_add(acc, s.coef[size_t(j)]);
    return acc;
}

}  // namespace ffiwa

#endif
