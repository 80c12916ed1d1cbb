/*
   Copyright 2026 The scorza authors

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

#ifndef SCORZA_MATRIX_HPP
#define SCORZA_MATRIX_HPP

#include <functional>
#include <unordered_map>
#include <vector>

#include "scorza/polynomial.hpp"

namespace scorza {

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c, T fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

    T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

template <class K>
using PolyMat = Mat<Polynomial<K>>;

template <class T>
Mat<T> transpose(const Mat<T>& m) {
    Mat<T> r(m.cols, m.rows, m.a.empty() ? T() : m.a[0]);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y, const T& zero) {
    if (x.cols != y.rows) math_error("DimensionMismatch", "matrix product shape");
    Mat<T> r(x.rows, y.cols, zero);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k)
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
    return r;
}

// ---------------------------------------------------------------------------
// Scalar matrices over a field
// ---------------------------------------------------------------------------

// Fraction-free Bareiss determinant.
template <class K>
K det_bareiss(Mat<K> m) {
    if (m.rows != m.cols) math_error("NonSquare", "determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0) return from_int(1, K{});  // convention; callers pass n >= 1
    K one = one_like(m.a[0]);
    K prev = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero(m.at(k, k))) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(m.at(i, k))) {
                    p = i;
                    break;
                }
            if (p < 0) return from_int(0, one);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                K num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num * field_inv(prev);
            }
        prev = m.at(k, k);
    }
    K d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

// Reduced row echelon form in place; returns pivot column list.
// Deterministic: first nonzero entry in row-major scan picks the pivot.
template <class K>
std::vector<int> rref(Mat<K>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!is_zero(m.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(p, j));
        K inv = field_inv(m.at(row, col));
        for (int j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m) {
    return static_cast<int>(rref(m).size());
}

// Columns form a basis of the right kernel; M*K = 0 exactly.
template <class K>
Mat<K> kernel_basis(const Mat<K>& m, const K& ctx) {
    Mat<K> r = m;
    std::vector<int> pivots = rref(r);
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (pi < pivots.size() && pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    K zero = from_int(0, ctx), one = one_like(ctx);
    Mat<K> ker(m.cols, static_cast<int>(free_cols.size()), zero);
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        ker.at(fc, static_cast<int>(f)) = one;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            ker.at(pivots[pi], static_cast<int>(f)) = -r.at(static_cast<int>(pi), fc);
    }
    return ker;
}

// ---------------------------------------------------------------------------
// Polynomial matrices
// ---------------------------------------------------------------------------

template <class K>
RingPtr<K> entry_ring(const PolyMat<K>& m) {
    for (const auto& p : m.a)
        if (p.ring) return p.ring;
    math_error("DimensionMismatch", "matrix without ring context");
}

template <class K>
bool all_scalar(const PolyMat<K>& m) {
    for (const auto& p : m.a)
        if (p.degree() > 0) return false;
    return true;
}

template <class K>
K scalar_of(const Polynomial<K>& p, const K& ctx) {
    if (p.is_zero()) return from_int(0, ctx);
    return p.ts[0].c;
}

namespace detail {

// determinant of rows [level..n) on the column set `mask`, memoized by mask
template <class K>
Polynomial<K> det_cofactor_rec(const PolyMat<K>& m, uint32_t mask, int level,
                               std::unordered_map<uint32_t, Polynomial<K>>& memo,
                               const RingPtr<K>& ring) {
    if (mask == 0) return poly_const(ring, ring->one);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Polynomial<K> acc(ring);
    int sign = 1;
    for (int j = 0; j < m.cols; ++j) {
        if (!(mask & (1u << j))) continue;
        const Polynomial<K>& e = m.at(level, j);
        if (!e.is_zero()) {
            Polynomial<K> sub = det_cofactor_rec(m, mask & ~(1u << j), level + 1, memo, ring);
            Polynomial<K> term = e * sub;
            acc = (sign > 0) ? acc + term : acc - term;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace detail

// Exact determinant: Bareiss for scalar content, cofactor expansion with
// memoization over column subsets otherwise (every matrix here is <= 6x6 on
// the polynomial side).
template <class K>
Polynomial<K> determinant(const PolyMat<K>& m) {
    if (m.rows != m.cols) math_error("NonSquare", "determinant of non-square matrix");
    RingPtr<K> ring = entry_ring(m);
    if (m.rows == 0) return poly_const(ring, ring->one);
    if (all_scalar(m)) {
        Mat<K> s(m.rows, m.cols, from_int(0, ring->one));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) s.at(i, j) = scalar_of(m.at(i, j), ring->one);
        return poly_const(ring, det_bareiss(std::move(s)));
    }
    std::unordered_map<uint32_t, Polynomial<K>> memo;
    uint32_t full = (m.cols >= 32) ? ~0u : ((1u << m.cols) - 1);
    return detail::det_cofactor_rec(m, full, 0, memo, ring);
}

template <class K>
bool is_skew_symmetric(const PolyMat<K>& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i; j < m.cols; ++j)
            if (!(m.at(i, j) == -m.at(j, i))) return false;
    return true;
}

namespace detail {

template <class K>
Polynomial<K> pfaffian_rec(const PolyMat<K>& m, uint32_t mask,
                           std::unordered_map<uint32_t, Polynomial<K>>& memo, const RingPtr<K>& ring) {
    if (mask == 0) return poly_const(ring, ring->one);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int i0 = 0;
    while (!(mask & (1u << i0))) ++i0;
    uint32_t rest = mask & ~(1u << i0);
    Polynomial<K> acc(ring);
    int sign = 1;
    for (int j = i0 + 1; j < m.rows; ++j) {
        if (!(rest & (1u << j))) continue;
        const Polynomial<K>& e = m.at(i0, j);
        if (!e.is_zero()) {
            Polynomial<K> sub = pfaffian_rec(m, rest & ~(1u << j), memo, ring);
            Polynomial<K> term = e * sub;
            acc = (sign > 0) ? acc + term : acc - term;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace detail

// Pfaffian by recursive expansion along the first active row; pf^2 = det.
template <class K>
Polynomial<K> pfaffian(const PolyMat<K>& m) {
    if (m.rows != m.cols || (m.rows % 2) != 0) math_error("OddSize", "pfaffian needs even square size");
    if (!is_skew_symmetric(m)) math_error("NotSkewSymmetric", "pfaffian of non-skew matrix");
    RingPtr<K> ring = entry_ring(m);
    std::unordered_map<uint32_t, Polynomial<K>> memo;
    uint32_t full = (m.rows >= 32) ? ~0u : ((1u << m.rows) - 1);
    return detail::pfaffian_rec(m, full, memo, ring);
}

namespace detail {
inline void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(k);
    // lexicographic subsets
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            cur[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}
}  // namespace detail

template <class K>
PolyMat<K> submatrix(const PolyMat<K>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    PolyMat<K> r(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                 Polynomial<K>(entry_ring(m)));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
    return r;
}

// Pfaffians of all k x k principal submatrices, subsets in lexicographic order.
template <class K>
std::vector<Polynomial<K>> principal_pfaffians(const PolyMat<K>& m, int k) {
    if (m.rows != m.cols) math_error("NonSquare", "principal pfaffians of non-square matrix");
    if (k % 2) math_error("OddSize", "pfaffian size must be even");
    std::vector<std::vector<int>> subs;
    detail::subsets_of_size(m.rows, k, subs);
    std::vector<Polynomial<K>> out;
    out.reserve(subs.size());
    for (const auto& s : subs) out.push_back(pfaffian(submatrix(m, s, s)));
    return out;
}

// All k x k minors, row/column subsets in lexicographic order.
template <class K>
std::vector<Polynomial<K>> minors(int k, const PolyMat<K>& m) {
    std::vector<std::vector<int>> rs, cs;
    detail::subsets_of_size(m.rows, k, rs);
    detail::subsets_of_size(m.cols, k, cs);
    std::vector<Polynomial<K>> out;
    out.reserve(rs.size() * cs.size());
    for (const auto& r : rs)
        for (const auto& c : cs) out.push_back(determinant(submatrix(m, r, c)));
    return out;
}

// adjugate: M * adj(M) = det(M) * I
template <class K>
PolyMat<K> adjugate(const PolyMat<K>& m) {
    if (m.rows != m.cols) math_error("NonSquare", "adjugate of non-square matrix");
    RingPtr<K> ring = entry_ring(m);
    const int n = m.rows;
    PolyMat<K> adj(n, n, Polynomial<K>(ring));
    if (n == 1) {
        adj.at(0, 0) = poly_const(ring, ring->one);
        return adj;
    }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rs, cs;
            for (int t = 0; t < n; ++t) {
                if (t != i) rs.push_back(t);
                if (t != j) cs.push_back(t);
            }
            Polynomial<K> mi = determinant(submatrix(m, rs, cs));
            adj.at(j, i) = ((i + j) % 2 == 0) ? mi : -mi;
        }
#ifndef NDEBUG
    {
        Polynomial<K> det = determinant(m);
        PolyMat<K> prod = mat_mul(m, adj, Polynomial<K>(ring));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(prod.at(i, j) == (i == j ? det : Polynomial<K>(ring))))
                    math_error("ExactDivisionFailure", "adjugate post-condition violated");
    }
#endif
    return adj;
}

// 3x3 (or n x n) symmetric matrix of second partials
template <class K>
PolyMat<K> hessian_matrix(const Polynomial<K>& f) {
    const int n = f.ring->nvars();
    PolyMat<K> h(n, n, Polynomial<K>(f.ring));
    for (int i = 0; i < n; ++i) {
        Polynomial<K> fi = diff(f, i);
        for (int j = i; j < n; ++j) {
            h.at(i, j) = diff(fi, j);
            if (j != i) h.at(j, i) = h.at(i, j);
        }
    }
    return h;
}

// f(g x): precomposition with a linear change of coordinates
template <class K>
Polynomial<K> substitute_linear(const Polynomial<K>& f, const Mat<K>& g) {
    const int n = f.ring->nvars();
    if (g.rows != n || g.cols != n) math_error("DimensionMismatch", "substitution matrix must be square");
    std::vector<Polynomial<K>> images;
    for (int i = 0; i < n; ++i) {
        Polynomial<K> li(f.ring);
        for (int j = 0; j < n; ++j) li = li + scale(poly_var(f.ring, j), g.at(i, j));
        images.push_back(li);
    }
    return substitute(f, images);
}

template <class K>
Mat<K> identity_mat(int n, const K& ctx) {
    Mat<K> m(n, n, from_int(0, ctx));
    for (int i = 0; i < n; ++i) m.at(i, i) = one_like(ctx);
    return m;
}

// inverse of a square scalar matrix over a field
template <class K>
Mat<K> mat_inverse(const Mat<K>& m, const K& ctx) {
    if (m.rows != m.cols) math_error("NonSquare", "inverse of non-square matrix");
    const int n = m.rows;
    Mat<K> aug(n, 2 * n, from_int(0, ctx));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = one_like(ctx);
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) != n || piv[n - 1] != n - 1)
        math_error("DegenerateConfiguration", "matrix not invertible");
    Mat<K> inv(n, n, from_int(0, ctx));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

}  // namespace scorza

#endif
