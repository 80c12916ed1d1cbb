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

#ifndef SCORZA_SEVEN_POINTS_HPP
#define SCORZA_SEVEN_POINTS_HPP

#include <array>
#include <optional>

#include "scorza/ideal.hpp"
#include "scorza/solve.hpp"
#include "scorza/symdet.hpp"

namespace scorza {

// Seven points of the dual plane (rows), equivalently seven lines forming a
// prospective Aronhold system of bitangents.
template <class K>
struct PointConfig {
    Mat<K> pts;  // 7x3
};

template <class K>
PointConfig<K> make_point_config(Mat<K> pts) {
    if (pts.rows != 7 || pts.cols != 3) math_error("DimensionMismatch", "need seven points in the plane");
    // general position: no zero rows, no two rows proportional, no three
    // linearly dependent
    K zero = from_int(0, pts.a[0]);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k) {
                Mat<K> m(3, 3, zero);
                for (int c = 0; c < 3; ++c) {
                    m.at(0, c) = pts.at(i, c);
                    m.at(1, c) = pts.at(j, c);
                    m.at(2, c) = pts.at(k, c);
                }
                if (is_zero(det_bareiss(m)))
                    math_error("DegenerateConfiguration", "three of the seven points are collinear");
            }
    return PointConfig<K>{std::move(pts)};
}

// 2x3 matrix with linear first row and quadratic second row whose maximal
// minors cut the seven points.
template <class K>
struct HilbertBurch {
    PolyMat<K> m;  // 2x3 over a 3-variable ring
};

template <class K>
HilbertBurch<K> make_hilbert_burch(PolyMat<K> m) {
    if (m.rows != 2 || m.cols != 3) math_error("DimensionMismatch", "matrix must be 2x3");
    RingPtr<K> r = entry_ring(m);
    for (int j = 0; j < 3; ++j) {
        const auto& l = m.at(0, j);
        const auto& q = m.at(1, j);
        if (l.is_zero() || !is_homogeneous(l) || l.degree() != 1)
            math_error("DegenerateConfiguration", "first row must consist of linear forms");
        if (!q.is_zero() && (!is_homogeneous(q) || q.degree() != 2))
            math_error("DegenerateConfiguration", "second row must consist of quadrics");
    }
    // the three linear entries must be linearly independent
    Mat<K> lin(3, 3, from_int(0, r->one));
    for (int j = 0; j < 3; ++j)
        for (const auto& t : m.at(0, j).ts)
            for (int v = 0; v < 3; ++v)
                if (t.m.e[v]) lin.at(j, v) = t.c;
    if (rank(lin) != 3) math_error("DegenerateConfiguration", "linear row is degenerate");
    return HilbertBurch<K>{std::move(m)};
}

// ---------------------------------------------------------------------------
// shared linear algebra
// ---------------------------------------------------------------------------

// canonical (RREF) basis of the span of homogeneous polynomials of degree d
template <class K>
std::vector<Polynomial<K>> span_basis(const RingPtr<K>& r, const std::vector<Polynomial<K>>& polys, int d) {
    MonomialIndex<K> ix(monomial_basis(r, d));
    std::vector<const Polynomial<K>*> keep;
    for (const auto& p : polys)
        if (!p.is_zero()) keep.push_back(&p);
    Mat<K> m(static_cast<int>(keep.size()), ix.size(), from_int(0, r->one));
    for (size_t i = 0; i < keep.size(); ++i) {
        auto v = poly_to_vec(*keep[i], ix, r->one);
        for (int j = 0; j < ix.size(); ++j) m.at(static_cast<int>(i), j) = v[j];
    }
    auto pivots = rref(m);
    std::vector<Polynomial<K>> out;
    for (size_t i = 0; i < pivots.size(); ++i) {
        std::vector<Term<K>> ts;
        for (int j = 0; j < ix.size(); ++j)
            if (!is_zero(m.at(static_cast<int>(i), j))) ts.push_back({ix.basis[j], m.at(static_cast<int>(i), j)});
        out.push_back(poly_from_terms(r, std::move(ts)));
    }
    return out;
}

// { p homogeneous of degree d in y : p(images) lies in the ideal generated
// by the (homogeneous) modulus gens }, via one kernel computation in degree
// d * deg(images). This realizes graph-ideal elimination degree by degree.
template <class K>
std::vector<Polynomial<K>> pullback_membership_space(const RingPtr<K>& yring, int d,
                                                     const std::vector<Polynomial<K>>& images,
                                                     const std::vector<Polynomial<K>>& modulus,
                                                     const RingPtr<K>& xring) {
    const int e = images[0].degree();
    const int target_deg = d * e;
    MonomialIndex<K> ix(monomial_basis(xring, target_deg));
    auto ybasis = monomial_basis(yring, d);

    // composed monomials
    std::vector<Polynomial<K>> composed;
    composed.reserve(ybasis.size());
    for (const auto& m : ybasis) {
        Polynomial<K> prod = poly_const(xring, xring->one);
        for (size_t i = 0; i < images.size(); ++i)
            for (int k = 0; k < m.e[i]; ++k) prod = prod * images[i];
        composed.push_back(prod);
    }
    std::vector<Polynomial<K>> mods = graded_piece_gens(xring, modulus, target_deg);

    const int ncols = static_cast<int>(ybasis.size() + mods.size());
    Mat<K> A(ix.size(), ncols, from_int(0, xring->one));
    for (size_t c = 0; c < composed.size(); ++c) {
        auto v = poly_to_vec(composed[c], ix, xring->one);
        for (int rr = 0; rr < ix.size(); ++rr) A.at(rr, static_cast<int>(c)) = v[rr];
    }
    for (size_t c = 0; c < mods.size(); ++c) {
        auto v = poly_to_vec(mods[c], ix, xring->one);
        for (int rr = 0; rr < ix.size(); ++rr) A.at(rr, static_cast<int>(ybasis.size() + c)) = v[rr];
    }
    Mat<K> ker = kernel_basis(A, xring->one);
    // extract the y-parts and re-span
    std::vector<Polynomial<K>> raw;
    for (int c = 0; c < ker.cols; ++c) {
        std::vector<Term<K>> ts;
        for (size_t i = 0; i < ybasis.size(); ++i)
            if (!is_zero(ker.at(static_cast<int>(i), c))) ts.push_back({ybasis[i], ker.at(static_cast<int>(i), c)});
        if (!ts.empty()) raw.push_back(poly_from_terms(yring, std::move(ts)));
    }
    return span_basis(yring, raw, d);
}

// ---------------------------------------------------------------------------
// Hilbert-Burch matrix of seven points, via explicit syzygy solves
// ---------------------------------------------------------------------------

template <class K>
std::vector<Polynomial<K>> net_of_cubics(const PointConfig<K>& Z, const RingPtr<K>& r) {
    auto basis3 = monomial_basis(r, 3);
    Mat<K> E(7, 10, from_int(0, r->one));
    for (int i = 0; i < 7; ++i) {
        std::vector<K> pt{Z.pts.at(i, 0), Z.pts.at(i, 1), Z.pts.at(i, 2)};
        for (int j = 0; j < 10; ++j) {
            K v = one_like(r->one);
            for (int vv = 0; vv < 3; ++vv)
                for (int k = 0; k < basis3[j].e[vv]; ++k) v = v * pt[vv];
            E.at(i, j) = v;
        }
    }
    Mat<K> ker = kernel_basis(E, r->one);
    if (ker.cols != 3) math_error("DegenerateConfiguration", "points do not impose independent conditions");
    std::vector<Polynomial<K>> cubics;
    for (int c = 0; c < 3; ++c) {
        std::vector<Term<K>> ts;
        for (int j = 0; j < 10; ++j)
            if (!is_zero(ker.at(j, c))) ts.push_back({basis3[j], ker.at(j, c)});
        cubics.push_back(poly_from_terms(r, std::move(ts)));
    }
    return cubics;
}

template <class K>
HilbertBurch<K> hilbert_burch_from_points(const PointConfig<K>& Z) {
    RingPtr<K> r = PolynomialRing<K>::make({"x0", "x1", "x2"}, Z.pts.a[0]);
    auto cubics = net_of_cubics(Z, r);

    // one linear syzygy: sum l_i c_i = 0, 9 unknown coefficients
    MonomialIndex<K> ix4(monomial_basis(r, 4));
    Mat<K> A(ix4.size(), 9, from_int(0, r->one));
    for (int i = 0; i < 3; ++i)
        for (int v = 0; v < 3; ++v) {
            Polynomial<K> prod = mul_term(cubics[i], mono_var(v), r->one);
            auto vec = poly_to_vec(prod, ix4, r->one);
            for (int rr = 0; rr < ix4.size(); ++rr) A.at(rr, 3 * i + v) = vec[rr];
        }
    Mat<K> kerL = kernel_basis(A, r->one);
    if (kerL.cols != 1)
        math_error("DegenerateConfiguration", "expected a unique linear syzygy among the net cubics");
    std::vector<Polynomial<K>> lrow(3, Polynomial<K>(r));
    for (int i = 0; i < 3; ++i) {
        Polynomial<K> l(r);
        for (int v = 0; v < 3; ++v) l = l + scale(poly_var(r, v), kerL.at(3 * i + v, 0));
        lrow[i] = l;
    }

    // one quadratic syzygy modulo multiples of the linear one: 18 unknowns
    MonomialIndex<K> ix5(monomial_basis(r, 5));
    auto basis2 = monomial_basis(r, 2);
    Mat<K> B(ix5.size(), 18, from_int(0, r->one));
    for (int i = 0; i < 3; ++i)
        for (int b = 0; b < 6; ++b) {
            Polynomial<K> prod = mul_term(cubics[i], basis2[b], r->one);
            auto vec = poly_to_vec(prod, ix5, r->one);
            for (int rr = 0; rr < ix5.size(); ++rr) B.at(rr, 6 * i + b) = vec[rr];
        }
    Mat<K> kerQ = kernel_basis(B, r->one);

    // coordinates (in the 18-dim space) of x_v * linear-syzygy
    auto embed_mult = [&](int v) {
        std::vector<K> w(18, from_int(0, r->one));
        for (int i = 0; i < 3; ++i) {
            Polynomial<K> q = mul_term(lrow[i], mono_var(v), r->one);
            auto cv = coefficients_against_basis(q, basis2);
            for (int b = 0; b < 6; ++b) w[6 * i + b] = cv[b];
        }
        return w;
    };
    Mat<K> probe(3 + 1, 18, from_int(0, r->one));
    for (int v = 0; v < 3; ++v) {
        auto w = embed_mult(v);
        for (int c = 0; c < 18; ++c) probe.at(v, c) = w[c];
    }
    int base_rank = [&] {
        Mat<K> sub(3, 18, from_int(0, r->one));
        for (int v = 0; v < 3; ++v)
            for (int c = 0; c < 18; ++c) sub.at(v, c) = probe.at(v, c);
        return rank(sub);
    }();
    int chosen = -1;
    for (int c = 0; c < kerQ.cols && chosen < 0; ++c) {
        for (int t = 0; t < 18; ++t) probe.at(3, t) = kerQ.at(t, c);
        if (rank(probe) > base_rank) chosen = c;
    }
    if (chosen < 0)
        math_error("DegenerateConfiguration", "no quadratic syzygy beyond the multiples of the linear one");

    PolyMat<K> hb(2, 3, Polynomial<K>(r));
    for (int i = 0; i < 3; ++i) {
        hb.at(0, i) = lrow[i];
        Polynomial<K> q(r);
        for (int b = 0; b < 6; ++b) q = q + poly_monomial(r, basis2[b], kerQ.at(6 * i + b, chosen));
        hb.at(1, i) = q;
    }
    auto result = make_hilbert_burch(std::move(hb));

    // the maximal minors must regenerate the cubic net
    auto ms = minors(2, result.m);
    auto regen = span_basis(r, ms, 3);
    auto orig = span_basis(r, cubics, 3);
    if (regen.size() != orig.size())
        math_error("DegenerateConfiguration", "minors do not regenerate the net of cubics");
    for (size_t i = 0; i < regen.size(); ++i)
        if (!(regen[i] == orig[i]))
            math_error("DegenerateConfiguration", "minors do not regenerate the net of cubics");
    return result;
}

// ---------------------------------------------------------------------------
// The quartic with a given Aronhold system: net of cubics, jacobian sextic,
// then elimination of x from (y - grad_y net) + (jac). The elimination is
// carried out degree by degree with linear algebra; membership of p(y) in
// the graph ideal is equivalent to p(N(x)) lying in (jac).
// ---------------------------------------------------------------------------

template <class K>
Polynomial<K> quartic_from_hilbert_burch(const HilbertBurch<K>& hb) {
    RingPtr<K> xr = entry_ring(hb.m);

    // net(x,y) = det [[l(y)],[l(x)],[q(x)]]; its y-gradient gives the cubics N_i
    RingPtr<K> yr = PolynomialRing<K>::make({"y0", "y1", "y2"}, xr->one);
    RingPtr<K> xy = PolynomialRing<K>::make({"x0", "x1", "x2", "y0", "y1", "y2"}, xr->one);
    std::vector<int> x_up{0, 1, 2}, y_up{3, 4, 5};

    PolyMat<K> nc(3, 3, Polynomial<K>(xy));
    for (int j = 0; j < 3; ++j) {
        nc.at(0, j) = map_to_ring(hb.m.at(0, j), xy, y_up);
        nc.at(1, j) = map_to_ring(hb.m.at(0, j), xy, x_up);
        nc.at(2, j) = map_to_ring(hb.m.at(1, j), xy, x_up);
    }
    Polynomial<K> net = determinant(nc);
    if (net.is_zero()) math_error("DegenerateConfiguration", "net of cubics is degenerate");

    std::vector<Polynomial<K>> N(3, Polynomial<K>(xr));
    {
        std::vector<int> down(6, -1);
        down[0] = 0;
        down[1] = 1;
        down[2] = 2;
        for (int i = 0; i < 3; ++i) N[i] = map_to_ring(diff(net, 3 + i), xr, down);
    }

    PolyMat<K> jmat(3, 3, Polynomial<K>(xr));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) jmat.at(i, j) = diff(N[j], i);
    Polynomial<K> jac = determinant(jmat);
    if (jac.is_zero()) math_error("DegenerateConfiguration", "jacobian of the net vanishes");

    // lower degrees must contribute nothing
    for (int d = 1; d <= 3; ++d) {
        auto sp = pullback_membership_space(yr, d, N, {jac}, xr);
        if (!sp.empty()) math_error("EliminationNotPrincipal", "low-degree relation in the elimination ideal");
    }
    auto quartics = pullback_membership_space(yr, 4, N, {jac}, xr);
    if (quartics.size() != 1)
        math_error("EliminationNotPrincipal", "expected exactly one quartic in the elimination ideal");
    return monic(quartics[0]);
}

template <class K>
Polynomial<K> quartic_from_lines(const PointConfig<K>& Z) {
    return quartic_from_hilbert_burch(hilbert_burch_from_points(Z));
}

// ---------------------------------------------------------------------------
// Bitangent matrix via the Gale transform (rationals)
// ---------------------------------------------------------------------------

template <class K>
struct BitangentMatrixResult {
    Polynomial<K> quartic;    // in the plane ring x0, x1, x2
    PolyMat<K> btm;           // 8x8, zero diagonal, entries the 28 bitangents
    SymDetRep<K> rep;         // the representation sum (g^{-1} x)_k Q_k
    Mat<K> base_points;       // 8x4: the eighth point stacked over the Gale points
};

template <class K>
BitangentMatrixResult<K> bitangent_matrix(const PointConfig<K>& Z) {
    RingPtr<K> xr = PolynomialRing<K>::make({"x0", "x1", "x2"}, Z.pts.a[0]);
    RingPtr<K> yr = PolynomialRing<K>::make({"y0", "y1", "y2", "y3"}, Z.pts.a[0]);
    const K one = xr->one;
    const K zero = from_int(0, one);

    // Gale transform: rows of the kernel of Z^t
    Mat<K> P = transpose(Z.pts);
    if (rank(P) != 3) math_error("DegenerateConfiguration", "points span no plane");
    Mat<K> gale = kernel_basis(P, one);  // 7x4
    if (gale.cols != 4) math_error("DegenerateConfiguration", "Gale transform failed");

    // net of quadrics through the seven Gale points
    auto basis2 = monomial_basis(yr, 2);
    Mat<K> E(7, 10, zero);
    for (int i = 0; i < 7; ++i) {
        std::vector<K> pt(4, zero);
        for (int j = 0; j < 4; ++j) pt[j] = gale.at(i, j);
        for (int b = 0; b < 10; ++b) {
            K v = one;
            for (int vv = 0; vv < 4; ++vv)
                for (int k = 0; k < basis2[b].e[vv]; ++k) v = v * pt[vv];
            E.at(i, b) = v;
        }
    }
    Mat<K> kq = kernel_basis(E, one);
    if (kq.cols != 3) math_error("DegenerateConfiguration", "net of quadrics has wrong dimension");
    std::vector<Polynomial<K>> F;
    for (int c = 0; c < 3; ++c) {
        std::vector<Term<K>> ts;
        for (int b = 0; b < 10; ++b)
            if (!is_zero(kq.at(b, c))) ts.push_back({basis2[b], kq.at(b, c)});
        F.push_back(poly_from_terms(yr, std::move(ts)));
    }

    // coefficient matrices of the quadrics
    std::array<Mat<K>, 3> Q{Mat<K>(4, 4, zero), Mat<K>(4, 4, zero), Mat<K>(4, 4, zero)};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Polynomial<K> d2 = diff(diff(F[k], i), j);
                Q[k].at(i, j) = scalar_of(d2, one);
            }

    // eighth base point by saturating the net at the seven points
    std::vector<Polynomial<K>> pp3gens = F;
    {
        // one cubic through the seven Gale points outside the net multiples
        auto basis3 = monomial_basis(yr, 3);
        Mat<K> E3(7, static_cast<int>(basis3.size()), zero);
        for (int i = 0; i < 7; ++i) {
            std::vector<K> pt(4, zero);
            for (int j = 0; j < 4; ++j) pt[j] = gale.at(i, j);
            for (size_t b = 0; b < basis3.size(); ++b) {
                K v = one;
                for (int vv = 0; vv < 4; ++vv)
                    for (int k = 0; k < basis3[b].e[vv]; ++k) v = v * pt[vv];
                E3.at(i, static_cast<int>(b)) = v;
            }
        }
        Mat<K> k3 = kernel_basis(E3, one);
        std::vector<Polynomial<K>> cubics;
        for (int c = 0; c < k3.cols; ++c) {
            std::vector<Term<K>> ts;
            for (size_t b = 0; b < basis3.size(); ++b)
                if (!is_zero(k3.at(static_cast<int>(b), c))) ts.push_back({basis3[b], k3.at(static_cast<int>(b), c)});
            cubics.push_back(poly_from_terms(yr, std::move(ts)));
        }
        auto mults = graded_piece_gens(yr, F, 3);
        auto mult_basis = span_basis(yr, mults, 3);
        // first cubic outside the span of net multiples
        MonomialIndex<K> ix3(monomial_basis(yr, 3));
        Mat<K> probe(static_cast<int>(mult_basis.size()) + 1, ix3.size(), zero);
        for (size_t i = 0; i < mult_basis.size(); ++i) {
            auto v = poly_to_vec(mult_basis[i], ix3, one);
            for (int j = 0; j < ix3.size(); ++j) probe.at(static_cast<int>(i), j) = v[j];
        }
        int base_rank = static_cast<int>(mult_basis.size());
        bool found = false;
        for (const auto& c : cubics) {
            auto v = poly_to_vec(c, ix3, one);
            for (int j = 0; j < ix3.size(); ++j) probe.at(base_rank, j) = v[j];
            if (rank(probe) > base_rank) {
                pp3gens.push_back(c);
                found = true;
                break;
            }
        }
        if (!found) math_error("DegenerateConfiguration", "no separating cubic for the eighth point");
    }
    Ideal<K> net_ideal = make_ideal(yr, F);
    Ideal<K> pp3 = make_ideal(yr, pp3gens);
    Ideal<K> eighth = saturate(net_ideal, pp3);
    std::vector<K> m0 = point_from_linear_forms(eighth);

    // the seven lines through the eighth point, in net coordinates
    Mat<K> cc(7, 3, zero);
    for (int i = 0; i < 7; ++i) {
        std::vector<K> pt(4, zero);
        for (int j = 0; j < 4; ++j) pt[j] = gale.at(i, j) + (m0[j] + m0[j]);
        for (int k = 0; k < 3; ++k) cc.at(i, k) = evaluate(F[k], pt);
    }

    // projectivity g with Z_i g proportional to cc_i, solved linearly
    Mat<K> sys(21, 9, zero);
    int row = 0;
    for (int i = 0; i < 7; ++i) {
        const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (auto& pr : pairs) {
            int a = pr[0], b = pr[1];
            for (int k = 0; k < 3; ++k) {
                sys.at(row, 3 * k + a) = sys.at(row, 3 * k + a) + Z.pts.at(i, k) * cc.at(i, b);
                sys.at(row, 3 * k + b) = sys.at(row, 3 * k + b) - Z.pts.at(i, k) * cc.at(i, a);
            }
            ++row;
        }
    }
    Mat<K> kg = kernel_basis(sys, one);
    if (kg.cols != 1) math_error("ProjectivityNotUnique", "projectivity solution space is not 1-dimensional");
    Mat<K> gm(3, 3, zero);
    for (int k = 0; k < 3; ++k)
        for (int a = 0; a < 3; ++a) gm.at(k, a) = kg.at(3 * k + a, 0);
    if (is_zero(det_bareiss(gm))) math_error("ProjectivityNotUnique", "projectivity is singular");
    Mat<K> gi = mat_inverse(gm, one);

    // representation in the correct coordinates: qq = sum_k (gi x)_k Q_k
    PolyMat<K> qq(4, 4, Polynomial<K>(xr));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Polynomial<K> e(xr);
            for (int k = 0; k < 3; ++k) {
                Polynomial<K> lin(xr);
                for (int v = 0; v < 3; ++v) lin = lin + scale(poly_var(xr, v), gi.at(k, v));
                e = e + scale(lin, Q[k].at(i, j));
            }
            qq.at(i, j) = e;
        }
    SymDetRep<K> rep = make_symdetrep(qq);
    Polynomial<K> f = monic(rep_determinant(rep));
    if (f.is_zero() || f.degree() != 4) math_error("DegenerateConfiguration", "representation is degenerate");

    // bitangent matrix: base points against the representation
    Mat<K> np(8, 4, zero);
    for (int j = 0; j < 4; ++j) np.at(0, j) = m0[j];
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 4; ++j) np.at(i + 1, j) = gale.at(i, j);
    PolyMat<K> btm(8, 8, Polynomial<K>(xr));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Polynomial<K> e(xr);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    K c = np.at(i, a) * np.at(j, b);
                    if (!is_zero(c)) e = e + scale(qq.at(a, b), c);
                }
            btm.at(i, j) = e;
        }
    for (int i = 0; i < 8; ++i)
        if (!btm.at(i, i).is_zero()) math_error("DegenerateConfiguration", "bitangent matrix has nonzero diagonal");

    // first row against the input lines
    for (int i = 0; i < 7; ++i) {
        Polynomial<K> line(xr);
        for (int v = 0; v < 3; ++v) line = line + scale(poly_var(xr, v), Z.pts.at(i, v));
        if (!proportional(btm.at(0, i + 1), line))
            math_error("ProjectivityNotUnique", "first-row entries do not match the input lines");
    }

    return BitangentMatrixResult<K>{std::move(f), std::move(btm), std::move(rep), std::move(np)};
}

// ---------------------------------------------------------------------------
// Symmetric determinantal representation from a Hilbert-Burch matrix
// (rationals; the matching torsor is solved by rational point extraction)
// ---------------------------------------------------------------------------

inline std::vector<SymDetRep<Rational>> sym_det_from_hilbert_burch(const HilbertBurch<Rational>& hb) {
    using PQ = Polynomial<Rational>;
    RingPtr<Rational> xr = entry_ring(hb.m);
    const Rational one(1);

    auto mins = minors(2, hb.m);
    Ideal<Rational> I7 = make_ideal(xr, mins);

    // two cubics of the net vanish on the seven points plus two extra ones;
    // their ideal is generated by the joining line and a conic. Taking the
    // conic system as (l x0, l x1, l x2, q) contracts that line to the
    // coordinate point (0,0,0,1), which becomes the eighth base point.
    Ideal<Rational> twocub = make_ideal(xr, {mins[0], mins[1]});
    Ideal<Rational> extra2 = saturate(twocub, I7);
    PQ lform(xr), qform(xr);
    for (const auto& g : groebner(extra2)) {
        if (g.degree() == 1 && lform.is_zero()) lform = g;
        if (g.degree() == 2 && qform.is_zero()) qform = g;
    }
    if (lform.is_zero() || qform.is_zero())
        math_error("DegenerateConfiguration", "extra points of the chosen cubics are degenerate");
    std::vector<PQ> quads{lform * poly_var(xr, 0), lform * poly_var(xr, 1), lform * poly_var(xr, 2), qform};

    // Gale transform to P^3: quadrics and one extra cubic through its seven points
    RingPtr<Rational> yr = PolynomialRing<Rational>::make({"y0", "y1", "y2", "y3"}, one);
    auto net3 = pullback_membership_space(yr, 2, quads, mins, xr);
    if (net3.size() != 3) math_error("DegenerateConfiguration", "expected a net of quadrics in P^3");
    {
        // the net must vanish at (0,0,0,1)
        std::vector<Rational> e4{Rational(0), Rational(0), Rational(0), Rational(1)};
        for (const auto& q : net3)
            if (!is_zero(evaluate(q, e4)))
                math_error("DegenerateConfiguration", "net does not pass through the eighth point");
    }
    auto cub_space = pullback_membership_space(yr, 3, quads, mins, xr);
    // pick one cubic outside the multiples of the net
    PQ extra_cubic(yr);
    {
        auto mult_basis = span_basis(yr, graded_piece_gens(yr, net3, 3), 3);
        MonomialIndex<Rational> ix3(monomial_basis(yr, 3));
        Mat<Rational> probe(static_cast<int>(mult_basis.size()) + 1, ix3.size(), Rational(0));
        for (size_t i = 0; i < mult_basis.size(); ++i) {
            auto v = poly_to_vec(mult_basis[i], ix3, one);
            for (int j = 0; j < ix3.size(); ++j) probe.at(static_cast<int>(i), j) = v[j];
        }
        int base_rank = static_cast<int>(mult_basis.size());
        for (const auto& c : cub_space) {
            auto v = poly_to_vec(c, ix3, one);
            for (int j = 0; j < ix3.size(); ++j) probe.at(base_rank, j) = v[j];
            if (rank(probe) > base_rank) {
                extra_cubic = c;
                break;
            }
        }
        if (extra_cubic.is_zero()) math_error("DegenerateConfiguration", "no separating cubic in P^3");
    }

    // project the seven points from (0,0,0,1): eliminate y3
    Ideal<Rational> p3 = make_ideal(yr, {net3[0], net3[1], net3[2], extra_cubic});
    Ideal<Rational> proj = eliminate_keep_ring(p3, {3});
    std::vector<PQ> proj_cubics = span_basis(yr, graded_piece_gens(yr, proj.gens, 3), 3);
    if (proj_cubics.size() != 3)
        math_error("DegenerateConfiguration", "projected points carry no net of cubics");

    // transport back to the plane through the net of quadrics
    auto i7net = pullback_membership_space(xr, 3, net3, proj_cubics, yr);
    if (i7net.size() != 3) math_error("DegenerateConfiguration", "transported net has wrong dimension");

    // matching transformation: I7 cubics composed with g land in the span of i7net
    auto basis3 = monomial_basis(xr, 3);
    MonomialIndex<Rational> ix3(basis3);
    Mat<Rational> dnet(3, 10, Rational(0));
    for (int i = 0; i < 3; ++i) {
        auto v = poly_to_vec(i7net[i], ix3, one);
        for (int j = 0; j < 10; ++j) dnet.at(i, j) = v[j];
    }
    Mat<Rational> dnet_r = dnet;
    auto pivots = rref(dnet_r);
    if (pivots.size() != 3) math_error("DegenerateConfiguration", "transported net is degenerate");

    // symbolic row coefficients of c_j(g x) in the 9 unknowns of g
    std::vector<std::string> gvars;
    for (int i = 0; i < 9; ++i) gvars.push_back("g" + std::to_string(i));
    RingPtr<Rational> gr = PolynomialRing<Rational>::make(gvars, one);
    std::vector<std::string> both{"x0", "x1", "x2"};
    for (auto& v : gvars) both.push_back(v);
    RingPtr<Rational> xg = PolynomialRing<Rational>::make(both, one);

    // images: x_i -> sum_j g_{ij} x_j, g_k -> g_k
    std::vector<PQ> images;
    for (int i = 0; i < 3; ++i) {
        PQ im(xg);
        for (int j = 0; j < 3; ++j) im = im + poly_var(xg, j) * poly_var(xg, 3 + 3 * i + j);
        images.push_back(im);
    }
    for (int i = 0; i < 9; ++i) images.push_back(poly_var(xg, 3 + i));
    std::vector<int> x_into_xg{0, 1, 2};

    std::vector<PQ> conditions;
    for (int j = 0; j < 3; ++j) {
        std::vector<PQ> row(10, PQ(gr));
        PQ composed = substitute(map_to_ring(mins[j], xg, x_into_xg), images);
        for (const auto& t : composed.ts) {
            // split the term into x-part and g-part
            Monomial xm, gm;
            int xd = 0, gd = 0;
            for (int v = 0; v < 3; ++v) {
                xm.e[v] = t.m.e[v];
                xd += t.m.e[v];
            }
            for (int v = 0; v < 9; ++v) {
                gm.e[v] = t.m.e[3 + v];
                gd += t.m.e[3 + v];
            }
            xm.deg = static_cast<uint16_t>(xd);
            gm.deg = static_cast<uint16_t>(gd);
            auto it = ix3.pos.find(xm);
            if (it == ix3.pos.end()) math_error("MonomialNotInBasis", "unexpected composed monomial");
            row[it->second] = row[it->second] + poly_monomial(gr, gm, t.c);
        }
        // 4x4 minors over pivot columns plus one non-pivot column
        for (int c = 0; c < 10; ++c) {
            bool is_pivot = false;
            for (int p : pivots) is_pivot = is_pivot || (p == c);
            if (is_pivot) continue;
            std::vector<int> cols(pivots.begin(), pivots.end());
            cols.push_back(c);
            std::sort(cols.begin(), cols.end());
            PQ acc(gr);
            for (int t = 0; t < 4; ++t) {
                std::vector<int> rest;
                for (int s = 0; s < 4; ++s)
                    if (s != t) rest.push_back(cols[s]);
                Mat<Rational> m3(3, 3, Rational(0));
                for (int rr = 0; rr < 3; ++rr)
                    for (int ccx = 0; ccx < 3; ++ccx) m3.at(rr, ccx) = dnet.at(rr, rest[ccx]);
                Rational minor3 = det_bareiss(m3);
                if (sgn(minor3) == 0 && row[cols[t]].is_zero()) continue;
                PQ term = scale(row[cols[t]], minor3);
                acc = ((3 + t) % 2 == 0) ? acc + term : acc - term;
            }
            if (!acc.is_zero()) conditions.push_back(acc);
        }
    }

    PQ detg;
    {
        PolyMat<Rational> gmat(3, 3, PQ(gr));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) gmat.at(i, j) = poly_var(gr, 3 * i + j);
        detg = determinant(gmat);
    }
    Ideal<Rational> IG = make_ideal(gr, conditions);
    Ideal<Rational> SIG = saturate_element(IG, detg);
    auto dd = dimension_and_degree(SIG);
    if (dd.projective_dimension != 0)
        math_error("NoSolution", "matching ideal is not zero-dimensional (projective dim " +
                                     std::to_string(dd.projective_dimension) + ")");

    auto points = rational_points_projective(SIG);
    if (points.empty()) math_error("NoSolution", "matching ideal has no rational point");

    PQ expected = quartic_from_hilbert_burch(hb);
    // expected lives in its own y-ring; rebuild it over xr for comparison
    std::vector<int> y_into_x{0, 1, 2};
    PQ expected_x = map_to_ring(expected, xr, y_into_x);

    std::vector<SymDetRep<Rational>> reps;
    for (const auto& gpt : points) {
        Mat<Rational> gm(3, 3, Rational(0));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) gm.at(i, j) = gpt[3 * i + j];
        if (is_zero(det_bareiss(gm))) continue;
        // representation: sum_i l_i(x) Hess(F_i), with l_i = column i of g applied to x
        PolyMat<Rational> mrep(4, 4, PQ(xr));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                PQ e(xr);
                for (int i = 0; i < 3; ++i) {
                    Rational coeff = scalar_of(diff(diff(net3[i], a), b), one);
                    if (sgn(coeff) == 0) continue;
                    PQ lin(xr);
                    for (int k = 0; k < 3; ++k) lin = lin + scale(poly_var(xr, k), gm.at(k, i));
                    e = e + scale(lin, coeff);
                }
                mrep.at(a, b) = e;
            }
        SymDetRep<Rational> rep = make_symdetrep(std::move(mrep));
        PQ det = rep_determinant(rep);
        if (!det.is_zero() && proportional(det, expected_x)) reps.push_back(std::move(rep));
    }
    if (reps.empty()) math_error("NoSolution", "no matching solution produced a valid representation");
    return reps;
}

}  // namespace scorza

#endif
