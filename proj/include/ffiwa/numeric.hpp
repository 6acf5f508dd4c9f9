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

#ifndef FFIWA_NUMERIC_HPP
#define FFIWA_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ffiwa {

/// Exact arbitrary-precision integer.  Every quantity in this library is
/// either an Int, a ratio of Ints, or a vector of Ints; no floating point.
using Int = boost::multiprecision::cpp_int;

/// Reduced fraction, used for p-adic valuations of cyclotomic integers.
struct Rational {
    Int num{0};
    Int den{1};

    Rational() = default;
    Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { reduce(); }
    Rational(long n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)

    void reduce() {
        if (den == 0) throw UsageError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = boost::multiprecision::gcd(num < 0 ? Int(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    std::string str() const {
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    }
};

inline Int int_pow(const Int& base, uint64_t e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline uint64_t u64_pow(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) r *= base;
    return r;
}

/// Exact p-adic valuation of a nonzero integer.
inline long ord_p(Int x, const Int& p) {
    if (x == 0) throw UsageError("ord_p of zero");
    if (x < 0) x = -x;
    long v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

/// Binomial coefficient, exact.
inline Int binomial(const Int& n, uint64_t k) {
    Int r = 1;
    for (uint64_t i = 0; i < k; ++i) {
        r *= (n - Int(i));
        r /= Int(i + 1);
    }
    return r;
}

/// Nonnegative representative of a mod m, with m > 0.
inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Inverse of a mod m (gcd(a, m) = 1).
inline Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = mod_pos(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw UsageError("mod_inverse: not invertible");
    return mod_pos(old_s, m);
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Möbius function for small n.
inline int moebius(uint64_t n) {
    int mu = 1;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace ffiwa

#endif
