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

#ifndef FFIWA_FIELD_HPP
#define FFIWA_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace ffiwa {

/// An element of F_q = F_{p^e}, encoded as an integer in [0, q): the digits
/// of the encoding in base p are the coordinates with respect to the power
/// basis 1, x, ..., x^{e-1} of F_p[x]/(modulus).
using GF = uint64_t;

/// Description of a finite field F_{p^e}.
///
/// The defining modulus is the first irreducible monic polynomial of degree e
/// over F_p in enumeration order (monic polynomials ordered by the base-p
/// value of their non-leading coefficient vector), so that two FieldSpec
/// objects with equal (p, e) are always identical and every computation over
/// them is reproducible bit for bit.
struct FieldSpec {
    uint32_t p = 2;                  ///< prime characteristic
    uint32_t e = 1;                  ///< extension degree over F_p
    uint64_t q = 2;                  ///< field order p^e
    std::vector<uint32_t> modulus;   ///< monic, degree e, coefficients in F_p

    bool operator==(const FieldSpec& o) const { return p == o.p && e == o.e; }
};

namespace detail {

// Multiplies two F_p coefficient vectors and reduces modulo the field modulus.
inline void gf_mul_mod(const FieldSpec& F, const uint32_t* a, const uint32_t* b,
                       uint32_t* out) {
    const uint32_t e = F.e, p = F.p;
    uint32_t prod[32] = {0};
    for (uint32_t i = 0; i < e; ++i) {
        if (!a[i]) continue;
        for (uint32_t j = 0; j < e; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // reduce by modulus (monic): x^e = -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
    for (int k = 2 * e - 2; k >= int(e); --k) {
        uint32_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (uint32_t j = 0; j < e; ++j) {
            uint32_t sub = (c * F.modulus[j]) % p;
            prod[k - e + j] = (prod[k - e + j] + p - sub) % p;
        }
    }
    for (uint32_t i = 0; i < e; ++i) out[i] = prod[i];
}

inline void gf_decode(const FieldSpec& F, GF x, uint32_t* digits) {
    for (uint32_t i = 0; i < F.e; ++i) {
        digits[i] = uint32_t(x % F.p);
        x /= F.p;
    }
}

inline GF gf_encode(const FieldSpec& F, const uint32_t* digits) {
    GF x = 0;
    for (uint32_t i = F.e; i-- > 0;) x = x * F.p + digits[i];
    return x;
}

}  // namespace detail

inline GF gf_add(const FieldSpec& F, GF a, GF b) {
    if (F.e == 1) return (a + b) % F.p;
    uint32_t da[32], db[32];
    detail::gf_decode(F, a, da);
    detail::gf_decode(F, b, db);
    for (uint32_t i = 0; i < F.e; ++i) da[i] = (da[i] + db[i]) % F.p;
    return detail::gf_encode(F, da);
}

inline GF gf_neg(const FieldSpec& F, GF a) {
    if (F.e == 1) return a ? F.p - a : 0;
    uint32_t da[32];
    detail::gf_decode(F, a, da);
    for (uint32_t i = 0; i < F.e; ++i) da[i] = da[i] ? F.p - da[i] : 0;
    return detail::gf_encode(F, da);
}

inline GF gf_sub(const FieldSpec& F, GF a, GF b) { return gf_add(F, a, gf_neg(F, b)); }

inline GF gf_mul(const FieldSpec& F, GF a, GF b) {
    if (F.e == 1) return (a * b) % F.p;
    uint32_t da[32], db[32], out[32];
    detail::gf_decode(F, a, da);
    detail::gf_decode(F, b, db);
    detail::gf_mul_mod(F, da, db, out);
    return detail::gf_encode(F, out);
}

inline GF gf_pow(const FieldSpec& F, GF a, uint64_t n) {
    GF r = 1, b = a;
    while (n) {
        if (n & 1) r = gf_mul(F, r, b);
        b = gf_mul(F, b, b);
        n >>= 1;
    }
    return r;
}

inline GF gf_inv(const FieldSpec& F, GF a) {
    if (a == 0) throw UsageError("division by zero in F_q");
    return gf_pow(F, a, F.q - 2);
}

/// Frobenius x -> x^p.
inline GF gf_frobenius(const FieldSpec& F, GF a) { return gf_pow(F, a, F.p); }

/// Absolute trace F_q -> F_p, returned as an integer in [0, p).
inline uint32_t gf_trace(const FieldSpec& F, GF a) {
    GF s = 0, x = a;
    for (uint32_t i = 0; i < F.e; ++i) {
        s = gf_add(F, s, x);
        x = gf_frobenius(F, x);
    }
    return uint32_t(s % F.p);  // trace lies in the prime field
}

/// Multiplicative order of a nonzero element.
inline uint64_t gf_order(const FieldSpec& F, GF a) {
    if (a == 0) throw UsageError("order of zero");
    uint64_t n = 1;
    GF x = a;
    while (x != 1) {
        x = gf_mul(F, x, a);
        ++n;
    }
    return n;
}

/// Smallest primitive element (generator of F_q^x) in encoding order.
inline GF gf_primitive_element(const FieldSpec& F) {
    for (GF a = 1; a < F.q; ++a)
        if (gf_order(F, a) == F.q - 1) return a;
    throw Error("no primitive element found");  // unreachable
}

namespace detail {

// Irreducibility over F_p of a monic polynomial given by F_p coefficients,
// by exhaustive trial division.  Used only for field construction.
inline bool fp_irreducible(uint32_t p, const std::vector<uint32_t>& c) {
    const size_t d = c.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    // trial division by all monic polynomials of degree <= d/2
    for (size_t dd = 1; 2 * dd <= d; ++dd) {
        uint64_t count = u64_pow(p, uint32_t(dd));
        for (uint64_t enc = 0; enc < count; ++enc) {
            std::vector<uint32_t> div(dd + 1, 0);
            uint64_t t = enc;
            for (size_t i = 0; i < dd; ++i) { div[i] = uint32_t(t % p); t /= p; }
            div[dd] = 1;
            // long division remainder check
            std::vector<uint32_t> rem = c;
            while (rem.size() >= div.size()) {
                uint32_t lead = rem.back();
                if (lead) {
                    size_t shift = rem.size() - div.size();
                    for (size_t i = 0; i < div.size(); ++i) {
                        uint32_t sub = (lead * div[i]) % p;
                        rem[shift + i] = (rem[shift + i] + p - sub) % p;
                    }
                }
                rem.pop_back();
                while (!rem.empty() && rem.back() == 0) rem.pop_back();
                if (rem.empty()) return false;
                if (rem.size() < div.size()) break;
            }
        }
    }
    return true;
}

}  // namespace detail

/// Constructs the field F_{p^e} with the canonical (first-in-order) modulus.
inline FieldSpec make_field(uint32_t p, uint32_t e = 1) {
    if (!is_prime_u64(p)) throw UsageError("field characteristic must be prime");
    if (e < 1 || e > 20) throw UsageError("unsupported extension degree");
    FieldSpec F;
    F.p = p;
    F.e = e;
    F.q = u64_pow(p, e);
    if (e == 1) {
        F.modulus = {0, 1};  // x
        return F;
    }
    uint64_t count = u64_pow(p, e);
    for (uint64_t enc = 0; enc < count; ++enc) {
        std::vector<uint32_t> c(e + 1, 0);
        uint64_t t = enc;
        for (uint32_t i = 0; i < e; ++i) { c[i] = uint32_t(t % p); t /= p; }
        c[e] = 1;
        if (detail::fp_irreducible(p, c)) {
            F.modulus = c;
            return F;
        }
    }
    throw Error("no irreducible modulus found");  // unreachable
}

/// A field F_{q^n} together with the embedding of the base field F_q.
struct ExtField {
    FieldSpec field;   ///< F_{p^{e*n}} over the prime field
    FieldSpec base;    ///< the base F_{p^e}
    GF base_gen_image; ///< image in `field` of the class of x in `base`

    /// Embeds a base-field element.
    GF embed(GF a) const {
        uint32_t digits[32];
        detail::gf_decode(base, a, digits);
        GF acc = 0, pw = 1;
        for (uint32_t i = 0; i < base.e; ++i) {
            if (digits[i]) acc = gf_add(field, acc, gf_mul(field, GF(digits[i]), pw));
            pw = gf_mul(field, pw, base_gen_image);
        }
        return acc;
    }
};

/// Builds F_{q^n} with a deterministic modulus and the embedding F_q -> F_{q^n}
/// (the base generator maps to the first root of the base modulus in encoding
/// order).
inline ExtField make_extension_field(const FieldSpec& base, uint32_t n) {
    if (n < 1) throw UsageError("extension degree must be >= 1");
    ExtField E;
    E.base = base;
    E.field = make_field(base.p, base.e * n);
    if (base.e == 1) {
        E.base_gen_image = 0;  // class of x in F_p[x]/(x)
        return E;
    }
    // evaluate the base modulus at candidates in the big field
    for (GF a = 0; a < E.field.q; ++a) {
        GF acc = 0, pw = 1;
        for (uint32_t i = 0; i <= base.e; ++i) {
            if (base.modulus[i]) acc = gf_add(E.field, acc, gf_mul(E.field, GF(base.modulus[i]), pw));
            pw = gf_mul(E.field, pw, a);
        }
        if (acc == 0) {
            E.base_gen_image = a;
            return E;
        }
    }
    throw Error("base modulus has no root in extension");  // unreachable
}

}  // namespace ffiwa

#endif
