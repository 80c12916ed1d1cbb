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

#ifndef SCORZA_SYMDET_HPP
#define SCORZA_SYMDET_HPP

#include "scorza/matrix.hpp"

namespace scorza {

// A 4x4 symmetric matrix of linear forms in x,y,z: a quartic together with
// an even theta characteristic. Degenerate determinants are reported by the
// operations that cannot handle them, not forbidden here.
template <class K>
struct SymDetRep {
    PolyMat<K> A;  // entries in a 3-variable ring

    const RingPtr<K>& ring() const { return A.a[0].ring; }
};

template <class K>
SymDetRep<K> make_symdetrep(PolyMat<K> A) {
    if (A.rows != 4 || A.cols != 4) math_error("DimensionMismatch", "representation must be 4x4");
    RingPtr<K> r = entry_ring(A);
    for (auto& e : A.a) {
        if (!e.ring) e = Polynomial<K>(r);
        if (!e.is_zero() && (!is_homogeneous(e) || e.degree() != 1))
            math_error("DimensionMismatch", "entries must be linear forms");
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(A.at(i, j) == A.at(j, i))) math_error("NotSymmetric", "matrix must be symmetric");
    return SymDetRep<K>{std::move(A)};
}

// the three scalar symmetric matrices with A = x A0 + y A1 + z A2
template <class K>
std::array<Mat<K>, 3> coefficient_matrices(const SymDetRep<K>& rep) {
    RingPtr<K> r = rep.ring();
    K zero = from_int(0, r->one);
    std::array<Mat<K>, 3> out{Mat<K>(4, 4, zero), Mat<K>(4, 4, zero), Mat<K>(4, 4, zero)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (const auto& t : rep.A.at(i, j).ts)
                for (int v = 0; v < 3; ++v)
                    if (t.m.e[v]) out[v].at(i, j) = t.c;
    return out;
}

template <class K>
SymDetRep<K> rep_from_matrices(const RingPtr<K>& r, const std::array<Mat<K>, 3>& As) {
    PolyMat<K> A(4, 4, Polynomial<K>(r));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Polynomial<K> e(r);
            for (int v = 0; v < 3; ++v) e = e + scale(poly_var(r, v), As[v].at(i, j));
            A.at(i, j) = e;
        }
    return make_symdetrep(std::move(A));
}

template <class K>
Polynomial<K> rep_determinant(const SymDetRep<K>& rep) {
    return determinant(rep.A);
}

// Sextic model: the second flattening of the 4x4x3 tensor as a 4x3 matrix of
// linear forms in u0..u3; its maximal minors cut the degree-6 model of the
// curve embedded by K + theta. Columns are A_v * u for v = x, y, z.
template <class K>
struct SexticModel {
    PolyMat<K> M;                          // 4x3 over the u-ring
    std::vector<Polynomial<K>> cubics;     // its four maximal minors
    RingPtr<K> uring;
};

template <class K>
SexticModel<K> sextic_model(const SymDetRep<K>& rep) {
    if (rep_determinant(rep).is_zero())
        math_error("DegenerateRepresentation", "determinant vanishes identically");
    RingPtr<K> r = rep.ring();
    RingPtr<K> ur = PolynomialRing<K>::make({"u0", "u1", "u2", "u3"}, r->one);
    auto As = coefficient_matrices(rep);
    PolyMat<K> M(4, 3, Polynomial<K>(ur));
    for (int i = 0; i < 4; ++i)
        for (int v = 0; v < 3; ++v) {
            Polynomial<K> e(ur);
            for (int k = 0; k < 4; ++k) e = e + scale(poly_var(ur, k), As[v].at(i, k));
            M.at(i, v) = e;
        }
    SexticModel<K> s;
    s.M = M;
    s.cubics = minors(3, M);
    s.uring = ur;
    return s;
}

// Contact cubic det [[A, u^t],[u, 0]] = -u adj(A) u^t for a scalar vector u.
template <class K>
Polynomial<K> contact_cubic(const SymDetRep<K>& rep, const std::vector<K>& u) {
    if (u.size() != 4) math_error("DimensionMismatch", "contact point must have 4 coordinates");
    bool allzero = true;
    for (const auto& c : u) allzero = allzero && is_zero(c);
    if (allzero) math_error("DimensionMismatch", "contact vector must be nonzero");
    auto adj = adjugate(rep.A);
    RingPtr<K> r = rep.ring();
    Polynomial<K> acc(r);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            K c = u[i] * u[j];
            if (!is_zero(c)) acc = acc + scale(adj.at(i, j), c);
        }
    return -acc;
}

// Pfaffian of the 12x12 skew block matrix [[0,A2,-A1],[-A2,0,A0],[A1,-A0,0]];
// vanishing detects the Lueroth pairs with pentalateral theta.
template <class K>
K lueroth_pfaffian(const SymDetRep<K>& rep) {
    RingPtr<K> r = rep.ring();
    auto As = coefficient_matrices(rep);
    PolyMat<K> m(12, 12, Polynomial<K>(r));
    auto put = [&](int bi, int bj, int which, int sign) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                K c = As[which].at(i, j);
                if (sign < 0) c = -c;
                m.at(bi * 4 + i, bj * 4 + j) = poly_const(r, c);
            }
    };
    put(0, 1, 2, +1);
    put(0, 2, 1, -1);
    put(1, 0, 2, -1);
    put(1, 2, 0, +1);
    put(2, 0, 1, +1);
    put(2, 1, 0, -1);
    Polynomial<K> pf = pfaffian(m);
    return scalar_of(pf, r->one);
}

}  // namespace scorza

#endif
