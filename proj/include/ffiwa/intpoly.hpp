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

#ifndef FFIWA_INTPOLY_HPP
#define FFIWA_INTPOLY_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "linalg.hpp"
#include "numeric.hpp"

namespace ffiwa {

/// Polynomial with exact integer coefficients, index = power.
using IntPoly = std::vector<Int>;

inline void ip_trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int ip_deg(const IntPoly& a) { return int(a.size()) - 1; }

inline IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ip_trim(r);
    return r;
}

inline IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ip_trim(r);
    return r;
}

inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    ip_trim(r);
    return r;
}

/// Division with remainder by a monic polynomial (exact over Z).
inline std::pair<IntPoly, IntPoly> ip_divmod_monic(const IntPoly& a, const IntPoly& b) {
    if (b.empty() || b.back() != 1) throw UsageError("ip_divmod_monic: divisor not monic");
    IntPoly rem = a, quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, 0);
    while (rem.size() >= b.size()) {
        Int f = rem.back();
        size_t shift = rem.size() - b.size();
        if (f != 0) {
            quot[shift] = f;
            for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        }
        rem.pop_back();
        ip_trim(rem);
        if (rem.size() < b.size()) break;
    }
    ip_trim(quot);
    return {quot, rem};
}

inline Int ip_eval(const IntPoly& a, const Int& x) {
    Int acc = 0;
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

inline IntPoly ip_mod_monic(const IntPoly& a, const IntPoly& b) {
    return ip_divmod_monic(a, b).second;
}

/// Reverse: x^deg * a(1/x).
inline IntPoly ip_reverse(const IntPoly& a) {
    IntPoly r(a.rbegin(), a.rend());
    ip_trim(r);
    return r;
}

/// The N-th cyclotomic polynomial, computed by exact division of x^N - 1 by
/// the lower cyclotomic polynomials.
inline IntPoly cyclotomic_polynomial(uint64_t N) {
    static std::map<uint64_t, IntPoly> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    IntPoly xn1(N + 1, 0);
    xn1[0] = -1;
    xn1[N] = 1;
    IntPoly result = xn1;
    for (uint64_t d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        IntPoly phid = cyclotomic_polynomial(d);
        auto [q, r] = ip_divmod_monic(result, phid);
        if (!r.empty()) throw Error("cyclotomic division failure");
        result = q;
    }
    cache[N] = result;
    return result;
}

/// Resultant of two integer polynomials via the Sylvester matrix (Bareiss).
inline Int ip_resultant(const IntPoly& a, const IntPoly& b) {
    int da = ip_deg(a), db = ip_deg(b);
    if (da < 0 || db < 0) return 0;
    if (da == 0) return int_pow(a[0], uint64_t(db));
    if (db == 0) return int_pow(b[0], uint64_t(da));
    size_t n = size_t(da + db);
    Mat S(n, Vec(n, 0));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) S[size_t(i)][size_t(i + j)] = a[size_t(da - j)];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) S[size_t(db + i)][size_t(i + j)] = b[size_t(db - j)];
    return bareiss_det(std::move(S));
}

}  // namespace ffiwa

#endif
