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

#ifndef FFIWA_PLACE_HPP
#define FFIWA_PLACE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poly.hpp"

namespace ffiwa {

/// A place of k = F_q(T): either the place at infinity (the degree valuation)
/// or a finite place given by a monic irreducible polynomial.
struct Place {
    bool infinite = false;
    Poly prime;  // monic irreducible; empty when infinite

    Place() = default;
    static Place infinity() {
        Place v;
        v.infinite = true;
        return v;
    }
    static Place finite(Poly p) {
        Place v;
        v.prime = std::move(p);
        return v;
    }

    uint32_t degree() const { return infinite ? 1 : uint32_t(prime.deg()); }

    bool operator==(const Place& o) const {
        return infinite == o.infinite && prime == o.prime;
    }
    bool operator!=(const Place& o) const { return !(*this == o); }
    /// Total order: infinity first, then by (degree, coefficient encoding).
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return infinite;
        return prime < o.prime;
    }
};

/// Renders a polynomial as a string in T, coefficients as their base-p digit
/// encoding (an integer in 0..q-1).
inline std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t i = f.c.size(); i-- > 0;) {
        GF c = f.c[i];
        if (!c) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += "T";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

inline std::string place_to_string(const Place& v) {
    return v.infinite ? "inf" : poly_to_string(v.prime);
}

/// Parses the format written by poly_to_string; also accepts "aT^i" without
/// the explicit '*'.
inline Poly poly_from_string(const FieldSpec& F, const std::string& s) {
    if (s.empty()) throw UsageError("empty polynomial string");
    if (s.front() == '+' || s.back() == '+')
        throw UsageError("malformed polynomial string: '" + s + "'");
    std::vector<GF> coeffs;
    auto set_coeff = [&](size_t i, uint64_t c) {
        if (coeffs.size() <= i) coeffs.resize(i + 1, 0);
        coeffs[i] = gf_add(F, coeffs[i], c % F.q);
    };
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw UsageError("malformed polynomial string: '" + s + "'");
        uint64_t c = 1;
        size_t tp = term.find('T');
        std::string coef_part = term.substr(0, tp == std::string::npos ? term.size() : tp);
        if (!coef_part.empty() && coef_part.back() == '*') coef_part.pop_back();
        if (!coef_part.empty()) {
            for (char ch : coef_part)
                if (ch < '0' || ch > '9')
                    throw UsageError("malformed polynomial string: '" + s + "'");
            c = std::stoull(coef_part);
        } else if (tp == std::string::npos) {
            throw UsageError("malformed polynomial string: '" + s + "'");
        }
        size_t exp = 0;
        if (tp != std::string::npos) {
            exp = 1;
            std::string rest = term.substr(tp + 1);
            if (!rest.empty()) {
                if (rest[0] != '^' || rest.size() < 2)
                    throw UsageError("malformed polynomial string: '" + s + "'");
                for (size_t i = 1; i < rest.size(); ++i)
                    if (rest[i] < '0' || rest[i] > '9')
                        throw UsageError("malformed polynomial string: '" + s + "'");
                exp = std::stoull(rest.substr(1));
            }
        }
        if (c >= F.q) throw UsageError("coefficient out of range in '" + s + "'");
        set_coeff(exp, c);
    }
    return Poly(std::move(coeffs));
}

inline Place place_from_string(const FieldSpec& F, const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return Place::infinity();
    Poly f = poly_from_string(F, s);
    if (!f.is_monic()) throw UsageError("place polynomial must be monic: '" + s + "'");
    if (!poly_is_irreducible(F, f))
        throw UsageError("place polynomial must be irreducible: '" + s + "'");
    return Place::finite(std::move(f));
}

/// All places of degree <= max_degree in the canonical order (infinity first
/// when requested, then finite places by degree and coefficient encoding).
inline std::vector<Place> enumerate_places(const FieldSpec& F, uint32_t max_degree,
                                           bool include_infinity) {
    if (max_degree < 1) throw UsageError("max_degree must be >= 1");
    std::vector<Place> out;
    if (include_infinity) out.push_back(Place::infinity());
    for (uint32_t d = 1; d <= max_degree; ++d) {
        Int count = int_pow(Int(F.q), d);
        for (Int enc = 0; enc < count; ++enc) {
            Poly f = poly_from_encoding(F, d, enc);
            if (poly_is_irreducible(F, f)) out.push_back(Place::finite(std::move(f)));
        }
    }
    return out;
}

/// Number of monic irreducibles of degree n over F_q (Gauss/necklace formula).
inline Int irreducible_count(uint64_t q, uint32_t n) {
    Int s = 0;
    for (uint32_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        s += Int(moebius(n / d)) * int_pow(Int(q), d);
    }
    return s / n;
}

/// ord_v(f) for a nonzero rational function.
inline long ord_at(const FieldSpec& F, const Place& v, const RatFunc& f) {
    if (f.is_zero()) throw UsageError("ord of the zero function");
    if (v.infinite) return long(f.den.deg()) - long(f.num.deg());
    auto mult = [&](const Poly& g) {
        long m = 0;
        Poly h = g;
        while (true) {
            auto [q, r] = poly_divmod(F, h, v.prime);
            if (!r.is_zero()) break;
            h = q;
            ++m;
        }
        return m;
    };
    return mult(f.num) - mult(f.den);
}

/// Counts of monic irreducibles of each degree 1..max_degree, partitioned by
/// residue class modulo f (classes indexed by their encoding among residues
/// coprime to f).  Computed by inverting the Euler product of the class-graded
/// zeta function; exact integer arithmetic throughout.
struct ClassCounts {
    Poly modulus;                       // f (may be 1)
    std::vector<Poly> classes;          // residues coprime to f, sorted
    std::map<Poly, size_t> class_index;
    // counts[d-1][i] = #{P irreducible monic, deg P = d, P = classes[i] mod f}
    std::vector<std::vector<Int>> counts;
};

inline ClassCounts count_irreducibles_by_class(const FieldSpec& F, const Poly& f,
                                               uint32_t max_degree) {
    ClassCounts cc;
    cc.modulus = f.is_zero() ? Poly::one() : f;
    const int df = cc.modulus.deg();
    // residues coprime to f
    if (df == 0) {
        cc.classes = {Poly::zero()};  // single class: everything
        cc.class_index[Poly::zero()] = 0;
    } else {
        Int total = int_pow(Int(F.q), uint32_t(df));
        for (Int enc = 0; enc < total; ++enc) {
            // decode a residue (not necessarily monic) of degree < df
            std::vector<GF> c(size_t(df), 0);
            Int t = enc;
            for (int i = 0; i < df; ++i) { c[size_t(i)] = GF(t % F.q); t /= F.q; }
            Poly r(std::move(c));
            if (poly_gcd(F, r, cc.modulus).is_one()) {
                cc.class_index[r] = cc.classes.size();
                cc.classes.push_back(r);
            }
        }
    }
    const size_t nc = cc.classes.size();
    cc.counts.assign(max_degree, std::vector<Int>(nc, 0));

    // M[d][i] = number of monic polynomials of degree d, coprime to f, in class i
    auto monic_count = [&](uint32_t d) {
        std::vector<Int> m(nc, 0);
        if (df == 0) {
            m[0] = int_pow(Int(F.q), d);
            return m;
        }
        if (int(d) >= df) {
            // every coprime class has exactly q^{d - deg f} monic representatives
            Int each = int_pow(Int(F.q), d - uint32_t(df));
            for (auto& x : m) x = each;
            return m;
        }
        Int total = int_pow(Int(F.q), d);
        for (Int enc = 0; enc < total; ++enc) {
            Poly g = poly_from_encoding(F, d, enc);
            auto it = cc.class_index.find(poly_mod(F, g, cc.modulus));
            if (it != cc.class_index.end()) m[it->second] += 1;
        }
        return m;
    };

    // Partial product prod_{d' < d} prod_i (1 - [class_i] u^{d'})^{-counts},
    // held as a truncated series over the group ring Z[(A/f)^x] (dense vectors
    // indexed by class).  Multiplication by classes uses the residue product.
    std::vector<std::vector<size_t>> mul_table(nc, std::vector<size_t>(nc));
    for (size_t i = 0; i < nc; ++i)
        for (size_t j = 0; j < nc; ++j) {
            if (df == 0) { mul_table[i][j] = 0; continue; }
            Poly pr = poly_mod(F, poly_mul(F, cc.classes[i], cc.classes[j]), cc.modulus);
            mul_table[i][j] = cc.class_index.at(pr);
        }
    size_t one_idx = df == 0 ? 0 : cc.class_index.at(Poly::one());

    std::vector<std::vector<Int>> series(max_degree + 1, std::vector<Int>(nc, 0));
    series[0][one_idx] = 1;

    for (uint32_t d = 1; d <= max_degree; ++d) {
        std::vector<Int> M = monic_count(d);
        // counts at degree d: M minus the u^d coefficient of the partial product
        for (size_t i = 0; i < nc; ++i) cc.counts[d - 1][i] = M[i] - series[d][i];
        // fold the new factors into the partial product:
        // multiply by (1 - [i] u^d)^{-c} for each class i with c = counts
        for (size_t i = 0; i < nc; ++i) {
            const Int& c = cc.counts[d - 1][i];
            if (c == 0) continue;
            // series *= sum_j binom(c+j-1, j) [i]^j u^{jd}
            std::vector<std::vector<Int>> next(max_degree + 1, std::vector<Int>(nc, 0));
            size_t cls_pow = one_idx;
            for (uint32_t j = 0; j * d <= max_degree; ++j) {
                Int b = binomial(Int(c) + Int(j) - 1, j);
                if (j > 0) cls_pow = mul_table[cls_pow][i];
                for (uint32_t m = 0; m + j * d <= max_degree; ++m)
                    for (size_t g = 0; g < nc; ++g) {
                        if (series[m][g] == 0) continue;
                        next[m + j * d][mul_table[g][cls_pow]] += b * series[m][g];
                    }
            }
            series = std::move(next);
        }
    }
    return cc;
}

}  // namespace ffiwa

#endif
