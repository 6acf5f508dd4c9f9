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

#ifndef FFIWA_AUGMENTATION_HPP
#define FFIWA_AUGMENTATION_HPP

#include <vector>

#include "groupring.hpp"
#include "linalg.hpp"

namespace ffiwa {

/// The augmentation filtration I^0 > I^1 > I^2 > ... of (Z/p^N)[G] for a
/// finite abelian p-group G.  Each power is held as an integer lattice in
/// Z^{|G|} containing p^N Z^{|G|} (coordinates with respect to the group
/// element basis), in Hermite normal form.  I^{n+1} is generated as a module
/// by I^n * (sigma_i - 1) over the standard generators sigma_i.
class AugmentationFiltration {
  public:
    AugmentationFiltration(AbelianGroup G, uint32_t p, uint32_t N)
        : G_(std::move(G)), p_(p), pN_(int_pow(Int(p), N)) {
        for (auto d : G_.divisors) {
            uint64_t dd = d;
            while (dd % p == 0) dd /= p;
            if (dd != 1) throw UsageError("augmentation filtration requires a p-group");
        }
        const size_t n = G_.order();
        Mat full;
        for (size_t i = 0; i < n; ++i) {
            Vec row(n, 0);
            row[i] = 1;
            full.push_back(std::move(row));
        }
        levels_.push_back(hnf_rows(full));
        // I^1: spanned by sigma^a - 1 together with p^N relations
        Mat gen;
        for (uint64_t a = 1; a < n; ++a) {
            Vec row(n, 0);
            row[a] = 1;
            row[0] = -1;
            gen.push_back(std::move(row));
        }
        append_scaling(gen);
        levels_.push_back(hnf_rows(gen));
    }

    const AbelianGroup& group() const { return G_; }
    const Int& modulus() const { return pN_; }

    /// Lattice basis of I^n (built on demand).
    const Mat& level(size_t n) {
        while (levels_.size() <= n) {
            const Mat& prev = levels_.back();
            Mat gen;
            for (size_t gi = 0; gi < G_.divisors.size(); ++gi) {
                GrpElem sigma = G_.identity();
                sigma[gi] = 1;
                for (const auto& row : prev) gen.push_back(mul_by_t(row, sigma));
            }
            append_scaling(gen);
            levels_.push_back(hnf_rows(gen));
        }
        return levels_[n];
    }

    /// Membership of a (Z/p^N)[G] element in I^n.
    bool contains(const GroupRing<ZModRing>& x, size_t n) {
        return hnf_contains(level(n), Vec(x.c.begin(), x.c.end()));
    }

  private:
    void append_scaling(Mat& gen) {
        const size_t n = G_.order();
        for (size_t i = 0; i < n; ++i) {
            Vec row(n, 0);
            row[i] = pN_;
            gen.push_back(std::move(row));
        }
    }
    // multiplies the element with coordinate vector v by (sigma - 1)
    Vec mul_by_t(const Vec& v, const GrpElem& sigma) const {
        const size_t n = G_.order();
        Vec out(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            out[G_.flat(G_.add(G_.unflat(i), sigma))] += v[i];
            out[i] -= v[i];
        }
        return out;
    }

    AbelianGroup G_;
    uint32_t p_;
    Int pN_;
    std::vector<Mat> levels_;
};

/// Order and leading form of an element with respect to the augmentation
/// filtration: the largest n <= bound with x in I^n, together with the class
/// of x in I^n/I^{n+1} in coordinates over a Smith basis of that quotient.
struct AugmentationForm {
    int order = 0;
    bool resolved = false;        ///< false when x lies in I^{bound+1} (or x = 0)
    std::vector<Int> divisors;    ///< cyclic structure of I^n/I^{n+1}
    std::vector<Int> coords;      ///< class of x, one coordinate per divisor
};

inline AugmentationForm augmentation_analysis(AugmentationFiltration& filt,
                                              const GroupRing<ZModRing>& x, int bound) {
    AugmentationForm form;
    Vec v(x.c.begin(), x.c.end());
    int n = 0;
    while (n <= bound && hnf_contains(filt.level(size_t(n) + 1), v)) ++n;
    form.order = n;
    if (n > bound) {
        form.order = bound;
        form.resolved = false;  // inconclusive at this precision / bound
        return form;
    }
    form.resolved = true;
    const Mat& Ln = filt.level(size_t(n));
    const Mat& Ln1 = filt.level(size_t(n) + 1);
    auto a = hnf_solve(Ln, v);
    if (!a) throw Error("augmentation analysis: element not in its own level");
    Mat C;
    for (const auto& row : Ln1) {
        auto sol = hnf_solve(Ln, row);
        if (!sol) throw Error("augmentation analysis: filtration not nested");
        C.push_back(*sol);
    }
    SnfResult s = smith_normal_form(C);
    auto diag = s.diagonal();
    Vec y = vec_mat_mul(*a, s.V);
    for (size_t i = 0; i < Ln.size(); ++i) {
        Int d = i < diag.size() ? diag[i] : Int(0);
        if (d == 1) continue;
        if (d == 0) throw Error("augmentation quotient has a free part");
        form.divisors.push_back(d);
        form.coords.push_back(mod_pos(y[i], d));
    }
    return form;
}

}  // namespace ffiwa

#endif
