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

#ifndef SCORZA_ARONHOLD_HPP
#define SCORZA_ARONHOLD_HPP

#include "scorza/ideal.hpp"
#include "scorza/matrix.hpp"

namespace scorza {

// The 9x9 skew-symmetric contraction matrix of a ternary form f built from
// the Hessians of its three partial derivatives, in 3x3 block layout
//
//   [        0    H(f_z)   -H(f_y) ]
//   [  -H(f_z)        0     H(f_x) ]
//   [   H(f_y)  -H(f_x)         0  ]
//
// Entry ((i,k),(j,l)) = sum_e eps_{ije} d^3 f / dx_k dx_l dx_e.
// For a cubic the entries are scalars; for a quartic they are linear forms.
template <class K>
PolyMat<K> aronhold_matrix(const Polynomial<K>& f) {
    const RingPtr<K>& r = f.ring;
    // third partials T[a][b][c], symmetric; a<=b<=c stored fully for simplicity
    Polynomial<K> T[3][3][3];
    for (int a = 0; a < 3; ++a) {
        Polynomial<K> fa = diff(f, a);
        for (int b = a; b < 3; ++b) {
            Polynomial<K> fab = diff(fa, b);
            for (int c = b; c < 3; ++c) {
                Polynomial<K> v = diff(fab, c);
                T[a][b][c] = v;
                T[a][c][b] = v;
                T[b][a][c] = v;
                T[b][c][a] = v;
                T[c][a][b] = v;
                T[c][b][a] = v;
            }
        }
    }
    auto eps = [](int i, int j, int e) -> int {
        if (i == j || j == e || i == e) return 0;
        // parity of the permutation (i j e) of (0 1 2)
        return ((j - i + 3) % 3 == 1) ? 1 : -1;
    };
    PolyMat<K> m(9, 9, Polynomial<K>(r));
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l) {
                    Polynomial<K> acc(r);
                    for (int e = 0; e < 3; ++e) {
                        int s = eps(i, j, e);
                        if (s == 0) continue;
                        acc = (s > 0) ? acc + T[k][l][e] : acc - T[k][l][e];
                    }
                    m.at(3 * i + k, 3 * j + l) = std::move(acc);
                }
    return m;
}

// ---------------------------------------------------------------------------
// The Aronhold invariant of plane cubics: the degree-4 form in the 10 cubic
// coefficients obtained (up to scalar) from any 8-Pfaffian of the matrix
// above. The form is generated once, content-normalized with positive lead,
// and cached; it has 25 monomials.
// ---------------------------------------------------------------------------

// coefficient ring QQ[c0..c9]; c-index convention: monomial_basis(deg 3) of
// QQ[x,y,z] in grevlex-descending order
inline RingPtr<Rational> aronhold_coefficient_ring() {
    static RingPtr<Rational> r = [] {
        std::vector<std::string> vars;
        for (int i = 0; i < 10; ++i) vars.push_back("c" + std::to_string(i));
        return PolynomialRing<Rational>::make(vars, Rational(1));
    }();
    return r;
}

inline Polynomial<Rational> generate_aronhold_form() {
    auto big = PolynomialRing<Rational>::make({"x", "y", "z", "c0", "c1", "c2", "c3", "c4", "c5", "c6",
                                               "c7", "c8", "c9"},
                                              Rational(1));
    auto small = PolynomialRing<Rational>::make({"x", "y", "z"}, Rational(1));
    auto basis3 = monomial_basis(small, 3);
    Polynomial<Rational> f(big);
    {
        std::vector<Term<Rational>> ts;
        for (int i = 0; i < 10; ++i) {
            Monomial m;
            for (int v = 0; v < 3; ++v) m.e[v] = basis3[i].e[v];
            m.e[3 + i] = 1;
            m.deg = 4;
            ts.push_back({m, Rational(1)});
        }
        f = poly_from_terms(big, std::move(ts));
    }
    auto m9 = aronhold_matrix(f);
    auto pfs = principal_pfaffians(m9, 8);
    Polynomial<Rational> form(big);
    for (const auto& p : pfs)
        if (!p.is_zero()) {
            form = p;
            break;
        }
    if (form.is_zero()) math_error("DegenerateCovariant", "symbolic Aronhold pfaffians all vanish");
    // move to the 10-variable coefficient ring
    auto cring = aronhold_coefficient_ring();
    std::vector<int> vm(big->nvars(), -1);
    for (int i = 0; i < 10; ++i) vm[3 + i] = i;
    Polynomial<Rational> out = map_to_ring(form, cring, vm);
    primitive_part(out);
    return out;
}

inline const Polynomial<Rational>& aronhold_form() {
    static Polynomial<Rational> form = generate_aronhold_form();
    return form;
}

// Evaluate a rational-coefficient form at values in an arbitrary field.
template <class K>
K evaluate_form(const Polynomial<Rational>& form, const std::vector<K>& values, const K& ctx) {
    K acc = from_int(0, ctx);
    for (const auto& t : form.ts) {
        K v = from_rational(t.c, ctx);
        for (size_t i = 0; i < values.size(); ++i)
            for (int j = 0; j < t.m.e[i]; ++j) v = v * values[i];
        acc = acc + v;
    }
    return acc;
}

// Aronhold invariant of a ternary cubic; vanishes exactly on cubics of
// border rank <= 3 (Fermat orbit closure, cones included).
template <class K>
K aronhold_invariant(const Polynomial<K>& c) {
    if (c.ring->nvars() != 3 || !is_homogeneous(c) || (!c.is_zero() && c.degree() != 3))
        math_error("WrongDegree", "aronhold_invariant needs a ternary cubic");
    auto basis = monomial_basis(c.ring, 3);
    std::vector<K> v = coefficients_against_basis(c, basis);
    return evaluate_form(aronhold_form(), v, c.ring->one);
}

// ---------------------------------------------------------------------------
// The Scorza map S(f): the Aronhold covariant of a quartic, computed as the
// first nonzero 8-Pfaffian of the 9x9 matrix of f (entries linear in x,y,z),
// monic in grevlex.
// ---------------------------------------------------------------------------

template <class K>
Polynomial<K> scorza_map(const Polynomial<K>& f) {
    if (f.ring->nvars() != 3 || !is_homogeneous(f) || f.is_zero() || f.degree() != 4)
        math_error("WrongDegree", "scorza_map needs a ternary quartic");
    auto m9 = aronhold_matrix(f);
    std::vector<std::vector<int>> subs;
    detail::subsets_of_size(9, 8, subs);
    for (const auto& s : subs) {
        Polynomial<K> pf = pfaffian(submatrix(m9, s, s));
        if (!pf.is_zero()) return monic(pf);
    }
    math_error("DegenerateCovariant", "all 8-pfaffians vanish identically");
}

// rank of the symmetric coefficient matrix of the conic P_a P_b f
template <class K>
int scorza_rank_condition(const Polynomial<K>& f, const std::vector<K>& a, const std::vector<K>& b) {
    if (f.degree() != 4) math_error("WrongDegree", "expected a quartic");
    Polynomial<K> conic = polar(b, polar(a, f));
    Mat<K> m(3, 3, from_int(0, f.ring->one));
    for (int i = 0; i < 3; ++i) {
        Polynomial<K> ci = diff(conic, i);
        for (int j = 0; j < 3; ++j) {
            Polynomial<K> cij = diff(ci, j);
            m.at(i, j) = scalar_of(cij, f.ring->one);
        }
    }
    return rank(m);
}

// ---------------------------------------------------------------------------
// Generic Scorza covariant: S(f_c) for the generic quartic with 15 symbolic
// coefficients, a form of bidegree (4,4) in (x,y,z; c0..c14). Expensive to
// build, hence generated once and shipped as a frozen data file.
// ---------------------------------------------------------------------------

inline RingPtr<Rational> generic_quartic_ring() {
    static RingPtr<Rational> r = [] {
        std::vector<std::string> vars{"x", "y", "z"};
        for (int i = 0; i < 15; ++i) vars.push_back("c" + std::to_string(i));
        return PolynomialRing<Rational>::make(vars, Rational(1));
    }();
    return r;
}

inline Polynomial<Rational> generate_scorza_covariant() {
    auto big = generic_quartic_ring();
    auto small = PolynomialRing<Rational>::make({"x", "y", "z"}, Rational(1));
    auto basis4 = monomial_basis(small, 4);
    std::vector<Term<Rational>> ts;
    for (int i = 0; i < 15; ++i) {
        Monomial m;
        for (int v = 0; v < 3; ++v) m.e[v] = basis4[i].e[v];
        m.e[3 + i] = 1;
        m.deg = 5;
        ts.push_back({m, Rational(1)});
    }
    Polynomial<Rational> fc = poly_from_terms(big, std::move(ts));
    auto m9 = aronhold_matrix(fc);
    std::vector<std::vector<int>> subs;
    detail::subsets_of_size(9, 8, subs);
    for (const auto& s : subs) {
        Polynomial<Rational> pf = pfaffian(submatrix(m9, s, s));
        if (!pf.is_zero()) {
            primitive_part(pf);
            return pf;
        }
    }
    math_error("DegenerateCovariant", "generic covariant vanished");
}

// The 15 coefficient forms of the generic covariant (each of degree 4 in the
// c variables): the ideal they generate is the base locus of the Scorza map.
inline std::vector<Polynomial<Rational>> scorza_base_locus_gens(const Polynomial<Rational>& covariant) {
    auto big = generic_quartic_ring();
    static RingPtr<Rational> cring = [] {
        std::vector<std::string> vars;
        for (int i = 0; i < 15; ++i) vars.push_back("c" + std::to_string(i));
        return PolynomialRing<Rational>::make(vars, Rational(1));
    }();
    auto small = PolynomialRing<Rational>::make({"x", "y", "z"}, Rational(1));
    auto basis4 = monomial_basis(small, 4);
    std::vector<int> vm(big->nvars(), -1);
    for (int i = 0; i < 15; ++i) vm[3 + i] = i;

    std::vector<Polynomial<Rational>> out;
    for (const auto& xm : basis4) {
        std::vector<Term<Rational>> sel;
        for (const auto& t : covariant.ts) {
            bool match = true;
            for (int v = 0; v < 3; ++v)
                if (t.m.e[v] != xm.e[v]) {
                    match = false;
                    break;
                }
            if (match) {
                Term<Rational> tt = t;
                for (int v = 0; v < 3; ++v) tt.m.e[v] = 0;
                tt.m.deg = static_cast<uint16_t>(tt.m.deg - 4);
                sel.push_back(tt);
            }
        }
        Polynomial<Rational> coeff = poly_from_terms(big, std::move(sel));
        if (!coeff.is_zero()) out.push_back(map_to_ring(coeff, cring, vm));
    }
    return out;
}

}  // namespace scorza

#endif
