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

#ifndef FFIWA_CYCLOTOMIC_HPP
#define FFIWA_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "intpoly.hpp"

namespace ffiwa {

/// The ring of cyclotomic integers Z[x]/(Phi_N(x)), with exact integer
/// coefficients.  Elements are IntPoly values of degree < deg Phi_N.
/// When p_modulus != 0 the coefficients are kept reduced modulo it
/// (arithmetic in Z/p^N [zeta]).
struct CycloRing {
    using Elem = IntPoly;

    uint64_t N = 1;
    IntPoly phi;        // Phi_N, monic
    Int p_modulus = 0;  // 0 means exact integers

    explicit CycloRing(uint64_t order = 1, Int pmod = Int(0))
        : N(order), phi(cyclotomic_polynomial(order)), p_modulus(std::move(pmod)) {}

    size_t degree() const { return phi.size() - 1; }

    IntPoly reduce(IntPoly a) const {
        if (ip_deg(a) >= int(degree())) a = ip_mod_monic(a, phi);
        if (p_modulus != 0)
            for (auto& c : a) c = mod_pos(c, p_modulus);
        ip_trim(a);
        return a;
    }
    IntPoly zero() const { return {}; }
    IntPoly one() const { return reduce(IntPoly{1}); }
    IntPoly from_int(const Int& n) const { return reduce(IntPoly{n}); }
    /// zeta^k as a ring element.
    IntPoly zeta_power(uint64_t k) const {
        k %= N;
        IntPoly a(k + 1, 0);
        a[k] = 1;
        return reduce(std::move(a));
    }
    IntPoly add(const IntPoly& a, const IntPoly& b) const { return reduce(ip_add(a, b)); }
    IntPoly sub(const IntPoly& a, const IntPoly& b) const { return reduce(ip_sub(a, b)); }
    IntPoly mul(const IntPoly& a, const IntPoly& b) const { return reduce(ip_mul(a, b)); }
    IntPoly neg(const IntPoly& a) const { return reduce(ip_sub(IntPoly{}, a)); }
    bool is_zero(const IntPoly& a) const { return a.empty(); }

    /// Applies the Galois automorphism zeta -> zeta^s (gcd(s, N) = 1).
    IntPoly conjugate(const IntPoly& a, uint64_t s) const {
        IntPoly out;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            IntPoly term = zeta_power(i * s % N);
            for (auto& c : term) c *= a[i];
            out = ip_add(out, term);
        }
        return reduce(std::move(out));
    }

    /// Field norm to Q (well-defined on exact elements): the product of all
    /// Galois conjugates, computed as Res(Phi_N, a).
    Int norm(const IntPoly& a) const {
        if (p_modulus != 0) throw UsageError("norm requires exact coefficients");
        if (a.empty()) return 0;
        return ip_resultant(phi, a);
    }
};

/// Exact p-adic valuation of a nonzero element of Z[zeta_{p^n}], as a reduced
/// fraction with denominator p^{n-1}(p-1).  The valuation counts exact
/// divisions by the uniformizer pi = zeta - 1, using Phi_{p^n}(1) = p to keep
/// every step in integer arithmetic.
inline Rational valuation_cyclotomic(const CycloRing& ring, IntPoly x, uint32_t p) {
    if (ring.p_modulus != 0) throw UsageError("valuation requires exact coefficients");
    if (x.empty()) throw UsageError("valuation of zero");
    // ring.N must be a power of p (including p^0 = 1)
    uint64_t n = ring.N;
    while (n % p == 0) n /= p;
    if (n != 1) throw UsageError("valuation_cyclotomic requires a p-power cyclotomic ring");
    if (ring.N == 1) {
        // ordinary integers
        return Rational(Int(ord_p(x[0], Int(p))), Int(1));
    }
    const Int P(p);
    uint64_t e = ring.degree();  // p^{n-1}(p-1)
    Int k = 0;
    while (true) {
        Int at1 = ip_eval(x, 1);
        if (at1 % P != 0) break;
        // y = (x - (x(1)/p) * Phi) / (X - 1), exact in Z[X]
        Int c = at1 / P;
        IntPoly adj = x;
        if (c != 0) {
            IntPoly cphi = ring.phi;
            for (auto& t : cphi) t *= c;
            adj = ip_sub(adj, cphi);
        }
        // divide by (X - 1) via synthetic division; remainder must vanish
        IntPoly y;
        if (!adj.empty()) {
            y.assign(adj.size() - 1, 0);
            Int carry = 0;
            for (size_t i = adj.size(); i-- > 1;) {
                carry += adj[i];
                y[i - 1] = carry;
            }
            Int rem = carry + adj[0];
            if (rem != 0) throw Error("pi-division remainder nonzero");
        }
        x = ring.reduce(std::move(y));
        k += 1;
        if (x.empty()) throw Error("valuation: element vanished during division");
    }
    return Rational(k, Int(e));
}

}  // namespace ffiwa

#endif
