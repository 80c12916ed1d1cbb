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

#ifndef SCORZA_INVARIANTS_HPP
#define SCORZA_INVARIANTS_HPP

#include "scorza/ideal.hpp"
#include "scorza/seven_points.hpp"
#include "scorza/solve.hpp"

namespace scorza {

// Middle catalecticant: the contraction Sym^2 V* -> Sym^2 V of a quartic in
// the degree-2 monomial bases. Its determinant vanishes exactly on sums of
// five fourth powers.
template <class K>
K clebsch_invariant(const Polynomial<K>& f) {
    if (f.ring->nvars() != 3 || f.is_zero() || !is_homogeneous(f) || f.degree() != 4)
        math_error("WrongDegree", "clebsch_invariant needs a ternary quartic");
    auto basis2 = monomial_basis(f.ring, 2);
    Mat<K> cat(6, 6, from_int(0, f.ring->one));
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b) {
            Polynomial<K> d = f;
            for (int v = 0; v < 3; ++v)
                for (int k = 0; k < basis2[a].e[v] + basis2[b].e[v]; ++k) d = diff(d, v);
            K val = scalar_of(d, f.ring->one);
            cat.at(a, b) = val;
            cat.at(b, a) = val;
        }
    return det_bareiss(cat);
}

// ---------------------------------------------------------------------------
// Bitangency: f restricted to the line is a nonzero perfect square of a
// binary quadratic. Replaces radical-degree bookkeeping with a gcd-based
// square test on the restricted binary quartic.
// ---------------------------------------------------------------------------

namespace updetail {

template <class K>
void utrim(std::vector<K>& a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
}

template <class K>
std::vector<K> umod(std::vector<K> a, const std::vector<K>& b) {
    utrim(a);
    K inv = field_inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        K c = a.back() * inv;
        size_t d = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + d] = a[i + d] - c * b[i];
        utrim(a);
    }
    return a;
}

template <class K>
std::vector<K> ugcd(std::vector<K> a, std::vector<K> b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        auto r = umod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        K inv = field_inv(a.back());
        for (auto& c : a) c = c * inv;
    }
    return a;
}

template <class K>
bool udiv_exact(const std::vector<K>& a, const std::vector<K>& b, std::vector<K>& q) {
    std::vector<K> r = a;
    utrim(r);
    if (b.empty()) return false;
    if (r.empty()) {
        q.clear();
        return true;
    }
    if (r.size() < b.size()) return false;
    q.assign(r.size() - b.size() + 1, from_int(0, b.back()));
    K inv = field_inv(b.back());
    while (!r.empty() && r.size() >= b.size()) {
        K c = r.back() * inv;
        size_t d = r.size() - b.size();
        q[d] = c;
        for (size_t i = 0; i < b.size(); ++i) r[i + d] = r[i + d] - c * b[i];
        utrim(r);
    }
    return r.empty();
}

template <class K>
std::vector<K> uderiv(const std::vector<K>& a, const K& ctx) {
    std::vector<K> d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * from_int(static_cast<long>(i), ctx));
    utrim(d);
    return d;
}

// all irreducible factor multiplicities even (characteristic 0 or > deg)
template <class K>
bool is_square_univariate(std::vector<K> u, const K& ctx) {
    utrim(u);
    if (u.empty()) return false;
    if (u.size() == 1) return true;  // nonzero constant; square up to scalar
    if ((u.size() - 1) % 2) return false;
    std::vector<K> g = ugcd(u, uderiv(u, ctx));
    std::vector<K> v;
    if (!udiv_exact(u, g, v)) return false;  // v = squarefree part
    std::vector<K> v2(v.size() * 2 - 1, from_int(0, ctx));
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) v2[i + j] = v2[i + j] + v[i] * v[j];
    std::vector<K> w;
    if (!udiv_exact(u, v2, w)) return false;
    return is_square_univariate(std::move(w), ctx);
}

}  // namespace updetail

template <class K>
bool bitangency_check(const Polynomial<K>& f, const Polynomial<K>& line) {
    if (f.ring->nvars() != 3 || f.degree() != 4 || !is_homogeneous(f))
        math_error("WrongDegree", "bitangency check needs a ternary quartic");
    if (line.is_zero() || line.degree() != 1 || !is_homogeneous(line))
        math_error("WrongDegree", "bitangent candidate must be a nonzero linear form");
    const K zero = from_int(0, f.ring->one);
    K a = zero, b = zero, c = zero;
    for (const auto& t : line.ts) {
        if (t.m.e[0]) a = t.c;
        if (t.m.e[1]) b = t.c;
        if (t.m.e[2]) c = t.c;
    }
    // two independent points spanning the line
    std::vector<K> P(3, zero), Q(3, zero);
    if (!is_zero(c)) {
        P = {c, zero, -a};
        Q = {zero, c, -b};
    } else if (!is_zero(b)) {
        P = {b, -a, zero};
        Q = {zero, zero, f.ring->one};
    } else {
        P = {zero, f.ring->one, zero};
        Q = {zero, zero, f.ring->one};
    }
    RingPtr<K> st = PolynomialRing<K>::make({"s", "t"}, f.ring->one);
    std::vector<Polynomial<K>> images;
    for (int v = 0; v < 3; ++v)
        images.push_back(scale(poly_var(st, 0), P[v]) + scale(poly_var(st, 1), Q[v]));
    Polynomial<K> r = substitute(f, images);
    if (r.is_zero()) return false;  // line contained in the quartic

    // dehomogenize at t = 1; account for the multiplicity at infinity
    std::vector<K> u(5, zero);
    for (const auto& t : r.ts) u[t.m.e[0]] = t.c;
    updetail::utrim(u);
    int deg_s = static_cast<int>(u.size()) - 1;
    if ((4 - deg_s) % 2) return false;
    return updetail::is_square_univariate(u, f.ring->one);
}

// ---------------------------------------------------------------------------
// Order of the linear automorphism group of a quartic, counted over GF(p):
// impose coeffs(f(g y)) proportional to coeffs(f), saturate at det(g), and
// read the degree of the resulting zero-dimensional scheme in the g's.
// ---------------------------------------------------------------------------

struct AutomorphismOrder {
    bool positive_dimensional = false;
    long long order = 0;
};

inline Polynomial<Fp> reduce_quartic_mod_p(const Polynomial<Rational>& f, uint64_t p) {
    Fp ctx(1, p);
    RingPtr<Fp> r = PolynomialRing<Fp>::make(f.ring->vars, ctx);
    std::vector<Term<Fp>> ts;
    for (const auto& t : f.ts) {
        Fp c = from_rational(t.c, ctx);
        if (!is_zero(c)) ts.push_back({t.m, c});
    }
    return poly_from_terms(r, std::move(ts));
}

inline Polynomial<Fp> reduce_quartic_mod_p(const Polynomial<Fp>& f, uint64_t p) {
    if (!f.ts.empty() && f.ts[0].c.p != p) math_error("BadPrime", "quartic lives over a different prime field");
    return f;
}

// number-field coefficients are mapped through a root of the minimal
// polynomial mod p; BadPrime when none exists
inline Polynomial<Fp> reduce_quartic_mod_p(const Polynomial<NF>& f, uint64_t p) {
    Fp ctx(1, p);
    if (f.ts.empty()) math_error("WrongDegree", "zero quartic");
    auto nfctx = f.ts[0].c.ctx;
    updetail::UPoly mp;
    for (const auto& q : nfctx->min) {
        Fp c = from_rational(q, ctx);
        mp.push_back(c.v);
    }
    mp.push_back(1);
    auto roots = updetail::roots_mod_p(mp, p);
    if (roots.empty()) math_error("BadPrime", "minimal polynomial has no root modulo p");
    uint64_t r0 = roots.front();
    RingPtr<Fp> r = PolynomialRing<Fp>::make(f.ring->vars, ctx);
    std::vector<Term<Fp>> ts;
    for (const auto& t : f.ts) {
        Fp acc(0, p), pw(1, p);
        for (const auto& coord : t.c.c) {
            acc = acc + from_rational(coord, ctx) * pw;
            pw = pw * Fp(r0, p);
        }
        if (!is_zero(acc)) ts.push_back({t.m, acc});
    }
    return poly_from_terms(r, std::move(ts));
}

inline AutomorphismOrder automorphism_order_mod_p(const Polynomial<Fp>& fbar) {
    if (fbar.is_zero() || fbar.degree() != 4) math_error("WrongDegree", "automorphism order needs a quartic");
    const uint64_t p = fbar.ts[0].c.p;
    Fp one(1, p);

    std::vector<std::string> vars;
    for (int i = 0; i < 9; ++i) vars.push_back("g" + std::to_string(i));
    RingPtr<Fp> gr = PolynomialRing<Fp>::make(vars, one);
    std::vector<std::string> both = vars;
    both.push_back("y0");
    both.push_back("y1");
    both.push_back("y2");
    RingPtr<Fp> gy = PolynomialRing<Fp>::make(both, one);

    // images: g_k -> g_k, y_i -> sum_j g_{ij} y_j
    std::vector<Polynomial<Fp>> images;
    for (int i = 0; i < 9; ++i) images.push_back(poly_var(gy, i));
    for (int i = 0; i < 3; ++i) {
        Polynomial<Fp> im(gy);
        for (int j = 0; j < 3; ++j) im = im + poly_var(gy, 3 * i + j) * poly_var(gy, 9 + j);
        images.push_back(im);
    }
    std::vector<int> y_into(3);
    for (int i = 0; i < 3; ++i) y_into[i] = 9 + i;
    Polynomial<Fp> fg = substitute(map_to_ring(fbar, gy, y_into), images);

    // coefficient rows against the y-monomials of degree 4
    auto small = fbar.ring;
    auto basis4 = monomial_basis(small, 4);
    MonomialIndex<Fp> ix(basis4);
    std::vector<Polynomial<Fp>> rowg(15, Polynomial<Fp>(gr));
    for (const auto& t : fg.ts) {
        Monomial ym, gm;
        int yd = 0, gd = 0;
        for (int v = 0; v < 3; ++v) {
            ym.e[v] = t.m.e[9 + v];
            yd += ym.e[v];
        }
        for (int v = 0; v < 9; ++v) {
            gm.e[v] = t.m.e[v];
            gd += gm.e[v];
        }
        ym.deg = static_cast<uint16_t>(yd);
        gm.deg = static_cast<uint16_t>(gd);
        auto it = ix.pos.find(ym);
        if (it == ix.pos.end()) math_error("MonomialNotInBasis", "unexpected composed monomial");
        rowg[it->second] = rowg[it->second] + poly_monomial(gr, gm, t.c);
    }
    std::vector<Fp> fv = coefficients_against_basis(fbar, basis4);

    std::vector<Polynomial<Fp>> conds;
    for (int a = 0; a < 15; ++a)
        for (int b = a + 1; b < 15; ++b) {
            Polynomial<Fp> m = scale(rowg[a], fv[b]) - scale(rowg[b], fv[a]);
            if (!m.is_zero()) conds.push_back(m);
        }
    conds = span_basis(gr, conds, 4);

    Polynomial<Fp> detg;
    {
        PolyMat<Fp> gmat(3, 3, Polynomial<Fp>(gr));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) gmat.at(i, j) = poly_var(gr, 3 * i + j);
        detg = determinant(gmat);
    }
    Ideal<Fp> IG = make_ideal(gr, conds);
    Ideal<Fp> SIG = saturate_element(IG, detg);
    auto dd = dimension_and_degree(SIG);
    if (dd.codim != 8) return AutomorphismOrder{true, 0};
    return AutomorphismOrder{false, dd.degree};
}

template <class K>
AutomorphismOrder automorphism_order(const Polynomial<K>& f, uint64_t p) {
    if (!is_prime_u64(p)) math_error("BadPrime", "modulus is not prime");
    return automorphism_order_mod_p(reduce_quartic_mod_p(f, p));
}

}  // namespace scorza

#endif
