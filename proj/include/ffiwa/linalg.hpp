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

#ifndef FFIWA_LINALG_HPP
#define FFIWA_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace ffiwa {

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

inline Mat mat_identity(size_t n) {
    Mat I(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

inline Mat mat_mul(const Mat& A, const Mat& B) {
    if (A.empty() || B.empty()) return {};
    Mat C(A.size(), Vec(B[0].size(), 0));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t k = 0; k < B.size(); ++k) {
            if (A[i][k] == 0) continue;
            for (size_t j = 0; j < B[0].size(); ++j)
                if (B[k][j] != 0) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

inline Vec vec_mat_mul(const Vec& x, const Mat& A) {
    if (A.empty()) return {};
    Vec y(A[0].size(), 0);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (A[i][j] != 0) y[j] += x[i] * A[i][j];
    }
    return y;
}

/// Row Hermite normal form of the lattice spanned by the rows of A.
/// Returns the nonzero rows in echelon form: pivot columns strictly
/// increasing, pivots positive, entries above each pivot reduced into
/// [0, pivot).
inline Mat hnf_rows(Mat A) {
    const size_t m = A.size();
    const size_t n = m ? A[0].size() : 0;
    size_t r = 0;
    for (size_t col = 0; col < n && r < m; ++col) {
        // gcd elimination below row r in this column
        while (true) {
            size_t best = m;
            for (size_t i = r; i < m; ++i) {
                if (A[i][col] == 0) continue;
                if (best == m || boost::multiprecision::abs(A[i][col]) <
                                     boost::multiprecision::abs(A[best][col]))
                    best = i;
            }
            if (best == m) break;
            std::swap(A[r], A[best]);
            bool clean = true;
            for (size_t i = r + 1; i < m; ++i) {
                if (A[i][col] == 0) continue;
                Int q = A[i][col] / A[r][col];  // truncated division is fine here
                if (q != 0)
                    for (size_t j = 0; j < n; ++j) A[i][j] -= q * A[r][j];
                if (A[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (A[r][col] == 0) continue;
        if (A[r][col] < 0)
            for (size_t j = 0; j < n; ++j) A[r][j] = -A[r][j];
        // reduce entries above the pivot
        for (size_t i = 0; i < r; ++i) {
            Int q = A[i][col] / A[r][col];
            if (A[i][col] - q * A[r][col] < 0) q -= 1;  // floor division
            if (q != 0)
                for (size_t j = 0; j < n; ++j) A[i][j] -= q * A[r][j];
        }
        ++r;
    }
    A.resize(r);
    return A;
}

/// Reduces v modulo the lattice with HNF row basis H; the result is zero
/// iff v lies in the lattice.
inline Vec hnf_reduce(const Mat& H, Vec v) {
    for (const auto& row : H) {
        size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size()) continue;
        Int q = v[c] / row[c];
        if (v[c] - q * row[c] < 0) q -= 1;
        if (q != 0)
            for (size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
    }
    return v;
}

inline bool hnf_contains(const Mat& H, Vec v) {
    v = hnf_reduce(H, std::move(v));
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Expresses v as an integral combination of the HNF rows, if possible.
inline std::optional<Vec> hnf_solve(const Mat& H, Vec v) {
    Vec coeff(H.size(), 0);
    for (size_t i = 0; i < H.size(); ++i) {
        size_t c = 0;
        while (c < H[i].size() && H[i][c] == 0) ++c;
        if (c == H[i].size()) continue;
        if (v[c] % H[i][c] != 0) return std::nullopt;
        Int q = v[c] / H[i][c];
        coeff[i] = q;
        if (q != 0)
            for (size_t j = 0; j < v.size(); ++j) v[j] -= q * H[i][j];
    }
    for (const auto& x : v)
        if (x != 0) return std::nullopt;
    return coeff;
}

/// Smith normal form: D = U * A * V with U, V unimodular and the diagonal of
/// D a divisibility chain d_1 | d_2 | ...  Vinv = V^{-1} is maintained so the
/// caller can recover generators in the new coordinates.
struct SnfResult {
    Mat D, U, V, Vinv;
    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        size_t k = std::min(D.size(), D.empty() ? 0 : D[0].size());
        for (size_t i = 0; i < k; ++i) d.push_back(D[i][i]);
        return d;
    }
};

inline SnfResult smith_normal_form(Mat A) {
    const size_t m = A.size();
    const size_t n = m ? A[0].size() : 0;
    SnfResult R;
    R.U = mat_identity(m);
    R.V = mat_identity(n);
    R.Vinv = mat_identity(n);

    auto row_sub = [&](size_t i, size_t t, const Int& q) {  // row i -= q * row t
        for (size_t j = 0; j < n; ++j) A[i][j] -= q * A[t][j];
        for (size_t j = 0; j < m; ++j) R.U[i][j] -= q * R.U[t][j];
    };
    auto col_sub = [&](size_t j, size_t t, const Int& q) {  // col j -= q * col t
        for (size_t i = 0; i < m; ++i) A[i][j] -= q * A[i][t];
        for (size_t i = 0; i < n; ++i) R.V[i][j] -= q * R.V[i][t];
        for (size_t k = 0; k < n; ++k) R.Vinv[t][k] += q * R.Vinv[j][k];
    };
    auto row_swap = [&](size_t i, size_t t) {
        std::swap(A[i], A[t]);
        std::swap(R.U[i], R.U[t]);
    };
    auto col_swap = [&](size_t j, size_t t) {
        for (size_t i = 0; i < m; ++i) std::swap(A[i][j], A[i][t]);
        for (size_t i = 0; i < n; ++i) std::swap(R.V[i][j], R.V[i][t]);
        std::swap(R.Vinv[j], R.Vinv[t]);
    };

    size_t tmax = std::min(m, n);
    for (size_t t = 0; t < tmax; ++t) {
        while (true) {
            // locate the smallest nonzero entry in the trailing block
            size_t bi = m, bj = n;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j) {
                    if (A[i][j] == 0) continue;
                    if (bi == m || boost::multiprecision::abs(A[i][j]) <
                                       boost::multiprecision::abs(A[bi][bj])) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == m) { t = tmax; break; }  // trailing block is zero
            if (bi != t) row_swap(bi, t);
            if (bj != t) col_swap(bj, t);
            bool again = false;
            for (size_t i = t + 1; i < m; ++i) {
                if (A[i][t] == 0) continue;
                Int q = A[i][t] / A[t][t];
                row_sub(i, t, q);
                if (A[i][t] != 0) again = true;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (A[t][j] == 0) continue;
                Int q = A[t][j] / A[t][t];
                col_sub(j, t, q);
                if (A[t][j] != 0) again = true;
            }
            if (again) continue;
            // enforce divisibility of the trailing block
            bool fixed = true;
            for (size_t i = t + 1; i < m && fixed; ++i)
                for (size_t j = t + 1; j < n && fixed; ++j)
                    if (A[i][j] % A[t][t] != 0) {
                        row_sub(t, i, Int(-1));  // row t += row i
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (t == tmax) break;
        if (A[t][t] < 0) {
            for (size_t j = 0; j < n; ++j) A[t][j] = -A[t][j];
            for (size_t j = 0; j < m; ++j) R.U[t][j] = -R.U[t][j];
        }
    }
    R.D = std::move(A);
    return R;
}

/// Basis of the left kernel {x : x A = 0} of an integer matrix.
inline Mat left_kernel(const Mat& A) {
    SnfResult s = smith_normal_form(A);
    size_t rank = 0;
    auto diag = s.diagonal();
    for (const auto& d : diag)
        if (d != 0) ++rank;
    Mat K;
    for (size_t i = rank; i < s.U.size(); ++i) K.push_back(s.U[i]);
    return K;
}

/// Exact determinant by fraction-free Gaussian elimination (Bareiss).
inline Int bareiss_det(Mat A) {
    const size_t n = A.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            size_t piv = n;
            for (size_t i = k + 1; i < n; ++i)
                if (A[i][k] != 0) { piv = i; break; }
            if (piv == n) return 0;
            std::swap(A[k], A[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                A[i][j] = A[k][k] * A[i][j] - A[i][k] * A[k][j];
                A[i][j] /= prev;  // exact by Bareiss
            }
        prev = A[k][k];
    }
    return sign * A[n - 1][n - 1];
}

}  // namespace ffiwa

#endif
