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

#ifndef SCORZA_SCORZA_HPP
#define SCORZA_SCORZA_HPP

#include "scorza/aronhold.hpp"
#include "scorza/seven_points.hpp"
#include "scorza/solve.hpp"
#include "scorza/symdet.hpp"

namespace scorza {

// ---------------------------------------------------------------------------
// Determinantal representation of (S(f), theta) from a point q on S(f).
//
// The polar P_q f is a Fermat cubic; the singular locus of its Hessian
// determinant (the polihessian triangle) gives the three points matched to q
// by the correspondence. A divisor-class computation on S(f) produces the
// four cubics of H^0(K + theta), the graph of that linear system yields the
// 4x3 bilinear matrix, the u_i u_j cubics are rescaled through the
// (u_i + u_j)^2 identity, and Dixon's adjugate trick divides out S(f)^2.
// ---------------------------------------------------------------------------

namespace scdetail {

// derandomized hyperplane sequence: x + 2y + 3z, x + 3y + 5z, x + 5y + 7z, ...
inline std::pair<long, long> hyperplane_pair(int index) {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    if (index < 0 || index > 11) math_error("DegenerateDivisor", "hyperplane sequence exhausted");
    return {primes[index], primes[index + 1]};
}

// first Groebner element not divisible by the quartic (lowest leading term)
template <class K>
Polynomial<K> first_nonmultiple(const Ideal<K>& I, const Polynomial<K>& quartic) {
    for (const auto& g : groebner(I)) {
        if (g.degree() < quartic.degree()) return g;
        if (!divides(quartic.leading_monomial(), g.leading_monomial())) return g;
        // leading terms divisible: test exact division
        bool multiple = true;
        try {
            (void)divide_exact(g, quartic);
        } catch (const Error&) {
            multiple = false;
        }
        if (!multiple) return g;
    }
    math_error("DegenerateDivisor", "divisor ideal collapsed into the curve");
}

// the degree-3 graded piece of an ideal, from its reduced basis
template <class K>
std::vector<Polynomial<K>> cubic_piece(const Ideal<K>& I) {
    const auto& gb = groebner(I);
    std::vector<Polynomial<K>> gens;
    for (const auto& g : gb)
        if (g.degree() <= 3) gens.push_back(g);
    return span_basis(I.ring, graded_piece_gens(I.ring, gens, 3), 3);
}

// extract the unique cubic of the x-image of the saturated incidence ideal;
// single-variable saturations can lose points sitting on u_k = 0, so the
// eliminated projections are intersected until the cubic is unique
template <class K>
Polynomial<K> divisor_cubic(const RingPtr<K>& big, const std::vector<Polynomial<K>>& bilinear,
                            const Polynomial<K>& uquad, const std::vector<int>& uvars,
                            const std::vector<int>& xvars, const RingPtr<K>& xring) {
    std::vector<Polynomial<K>> gens = bilinear;
    gens.push_back(uquad);
    Ideal<K> I = make_ideal(big, gens);
    std::vector<int> candidates;
    for (int v : uvars)
        if (!involves_var(uquad, v)) candidates.push_back(v);
    for (int v : uvars)
        if (involves_var(uquad, v)) candidates.push_back(v);

    std::vector<int> down(big->nvars(), -1);
    for (size_t i = 0; i < xvars.size(); ++i) down[xvars[i]] = static_cast<int>(i);

    std::optional<Ideal<K>> acc;
    for (int v : candidates) {
        Ideal<K> S = saturate_variable(I, v);
        Ideal<K> E = eliminate_keep_ring(S, uvars);
        std::vector<Polynomial<K>> mapped;
        for (const auto& g : E.gens) mapped.push_back(map_to_ring(g, xring, down));
        Ideal<K> proj = make_ideal(xring, mapped);
        if (is_one_ideal(proj)) continue;  // everything was supported on u_v = 0
        acc = acc ? intersect(*acc, proj) : proj;
        // degree-3 piece of the accumulated image ideal
        std::vector<Polynomial<K>> low;
        for (const auto& g : groebner(*acc))
            if (g.degree() <= 3) low.push_back(g);
        auto basis = span_basis(xring, graded_piece_gens(xring, low, 3), 3);
        if (basis.size() == 1) return basis[0];
    }
    math_error("DegenerateDivisor", "section product does not cut a unique cubic");
}

}  // namespace scdetail

template <class K>
struct ScorzaRepResult {
    SymDetRep<K> rep;
    Polynomial<K> covariant;  // monic S(f)
    K det_scalar;             // det(rep) = det_scalar * covariant
};

template <class K>
ScorzaRepResult<K> scorza_det_rep(const Polynomial<K>& f, const std::vector<K>& q,
                                  int hyperplane_start = 0) {
    const RingPtr<K>& r = f.ring;
    if (r->nvars() != 3 || f.degree() != 4) math_error("WrongDegree", "scorza_det_rep needs a quartic");
    if (q.size() != 3) math_error("DimensionMismatch", "point needs 3 coordinates");

    Polynomial<K> pq = polar(q, f);
    if (pq.is_zero() || !is_zero(aronhold_invariant(pq)))
        math_error("PointNotOnCovariant", "the point does not lie on the Aronhold covariant");

    Polynomial<K> scf = scorza_map(f);

    // polihessian triangle and its three vertices
    Polynomial<K> hes = determinant(hessian_matrix(pq));
    if (hes.is_zero()) math_error("DegenerateDivisor", "polihessian vanishes identically");
    std::vector<Polynomial<K>> sing{diff(hes, 0), diff(hes, 1), diff(hes, 2)};
    {
        Ideal<K> singhes = make_ideal(r, sing);
        auto dd = dimension_and_degree(singhes);
        if (dd.projective_dimension != 0 || dd.degree != 3)
            math_error("DegenerateDivisor", "polihessian is not a reduced triangle");
    }

    // ideal of the point q
    std::vector<Polynomial<K>> dn;
    {
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                Polynomial<K> m = scale(poly_var(r, b), q[a]) - scale(poly_var(r, a), q[b]);
                if (!m.is_zero()) dn.push_back(m);
            }
    }

    for (int hidx = hyperplane_start; hidx <= 11; ++hidx) {
        auto [c1, c2] = scdetail::hyperplane_pair(hidx);
        Polynomial<K> h1 = poly_var(r, 0) + scale(poly_var(r, 1), from_int<K>(c1, r->one)) +
                           scale(poly_var(r, 2), from_int<K>(c2, r->one));

        // DP = (singhes + scf) ∩ (h1 + scf): three vertices plus a hyperplane
        // divisor on the curve
        std::vector<Polynomial<K>> g1 = sing;
        g1.push_back(scf);
        std::vector<Polynomial<K>> g2{h1, scf};
        Ideal<K> DP = intersect(make_ideal(r, g1), make_ideal(r, g2));

        Polynomial<K> h;
        try {
            h = scdetail::first_nonmultiple(DP, scf);
        } catch (const Error&) {
            continue;
        }

        // LD = (h * DN + scf) : DP, the cubics of H^0(K + theta)
        std::vector<Polynomial<K>> num;
        for (const auto& g : dn) num.push_back(h * g);
        num.push_back(scf);
        Ideal<K> LD = quotient(make_ideal(r, num), DP);
        auto cubics = scdetail::cubic_piece(LD);
        if (cubics.size() != 4) continue;  // retry with the next hyperplane

        // bilinear forms of the graph: sum_{k,i} lambda_{ki} u_k x_i with
        // sum_k lambda_{ki} C_k x_i in (scf)
        MonomialIndex<K> ix4(monomial_basis(r, 4));
        Mat<K> A(ix4.size(), 13, from_int(0, r->one));
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 3; ++i) {
                Polynomial<K> prod = mul_term(cubics[k], mono_var(i), r->one);
                auto v = poly_to_vec(prod, ix4, r->one);
                for (int rr = 0; rr < ix4.size(); ++rr) A.at(rr, 3 * k + i) = v[rr];
            }
        {
            auto v = poly_to_vec(scf, ix4, r->one);
            for (int rr = 0; rr < ix4.size(); ++rr) A.at(rr, 12) = v[rr];
        }
        Mat<K> ker = kernel_basis(A, r->one);
        if (ker.cols != 4) continue;

        // incidence ring [x, y, z, u0..u3]
        std::vector<std::string> vars = r->vars;
        for (int k = 0; k < 4; ++k) vars.push_back("u" + std::to_string(k));
        RingPtr<K> big = PolynomialRing<K>::make(vars, r->one);
        std::vector<int> xvars{0, 1, 2}, uvars{3, 4, 5, 6};

        std::vector<Polynomial<K>> bilinear;
        for (int col = 0; col < 4; ++col) {
            Polynomial<K> B(big);
            for (int k = 0; k < 4; ++k)
                for (int i = 0; i < 3; ++i) {
                    K lam = ker.at(3 * k + i, col);
                    if (is_zero(lam)) continue;
                    B = B + scale(poly_var(big, 3 + k) * poly_var(big, i), lam);
                }
            bilinear.push_back(B);
        }

        // cubics c_ij matched to the sections u_i u_j, and the auxiliary
        // (u_i + u_j)^2 cubics used to fix the scalings
        Polynomial<K> md[4][4], ad[4][4];
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i; j < 4 && ok; ++j) {
                try {
                    Polynomial<K> uu = poly_var(big, 3 + i) * poly_var(big, 3 + j);
                    md[i][j] = scdetail::divisor_cubic(big, bilinear, uu, uvars, xvars, r);
                    if (i != j) {
                        Polynomial<K> s = poly_var(big, 3 + i) + poly_var(big, 3 + j);
                        ad[i][j] = scdetail::divisor_cubic(big, bilinear, s * s, uvars, xvars, r);
                    }
                } catch (const Error&) {
                    ok = false;
                }
            }
        if (!ok) continue;

        // scaling: p_ii c_ii + p_jj c_jj + 2 p_ij c_ij = q_ij a_ij
        // unknowns: p_00..p_33 (10, i<=j) and q_ij (6, i<j)
        auto pidx = [](int i, int j) {  // 0..9
            static const int base[4] = {0, 4, 7, 9};
            return base[i] + (j - i);
        };
        MonomialIndex<K> ix3(monomial_basis(r, 3));
        Mat<K> S(60, 16, from_int(0, r->one));
        int row = 0, qcount = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                auto vii = poly_to_vec(md[i][i], ix3, r->one);
                auto vjj = poly_to_vec(md[j][j], ix3, r->one);
                auto vij = poly_to_vec(md[i][j], ix3, r->one);
                auto vad = poly_to_vec(ad[i][j], ix3, r->one);
                for (int t = 0; t < 10; ++t) {
                    S.at(row + t, pidx(i, i)) = vii[t];
                    S.at(row + t, pidx(j, j)) = vjj[t];
                    S.at(row + t, pidx(i, j)) = vij[t] + vij[t];
                    S.at(row + t, 10 + qcount) = -vad[t];
                }
                row += 10;
                ++qcount;
            }
        Mat<K> kscale = kernel_basis(S, r->one);
        if (kscale.cols != 1) continue;
        bool scale_ok = true;
        for (int i = 0; i < 4; ++i)
            if (is_zero(kscale.at(pidx(i, i), 0))) scale_ok = false;
        if (!scale_ok) continue;

        PolyMat<K> pmd(4, 4, Polynomial<K>(r));
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                pmd.at(i, j) = scale(md[i][j], kscale.at(pidx(i, j), 0));
                pmd.at(j, i) = pmd.at(i, j);
            }

        // Dixon: adjugate and divide S(f)^2 out of every entry
        Polynomial<K> scf2 = scf * scf;
        PolyMat<K> adj = adjugate(pmd);
        PolyMat<K> rep(4, 4, Polynomial<K>(r));
        bool division_ok = true;
        for (int i = 0; i < 4 && division_ok; ++i)
            for (int j = 0; j < 4 && division_ok; ++j) {
                try {
                    rep.at(i, j) = divide_exact(adj.at(i, j), scf2);
                } catch (const Error&) {
                    division_ok = false;
                }
            }
        if (!division_ok)
            math_error("ExactDivisionFailure", "matrix of sections is not symmetrizable");

        SymDetRep<K> result = make_symdetrep(std::move(rep));
        Polynomial<K> det = rep_determinant(result);
        if (det.is_zero() || !proportional(det, scf))
            math_error("ExactDivisionFailure", "representation determinant drifted from the covariant");
        K scalar = det.leading_coefficient() * field_inv(scf.leading_coefficient());
        return ScorzaRepResult<K>{std::move(result), scf, scalar};
    }
    math_error("DegenerateDivisor", "no admissible hyperplane divisor found");
}

// ---------------------------------------------------------------------------
// The inverse Scorza map: from a representation (g, theta) to the unique
// quartic f with S(f) = g inducing theta.
// ---------------------------------------------------------------------------

enum class MinorStrategy { Generic, Klein, Auto };

namespace scdetail {

// all degree-d monomials supported on the given variables
inline std::vector<Monomial> monomials_on(const std::vector<int>& vars, int d) {
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(size_t, int)> rec = [&](size_t pos, int rem) {
        if (pos == vars.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur.e[vars[pos]] = static_cast<uint8_t>(e);
            cur.deg = static_cast<uint16_t>(cur.deg + e);
            rec(pos + 1, rem - e);
            cur.deg = static_cast<uint16_t>(cur.deg - e);
            cur.e[vars[pos]] = 0;
        }
    };
    rec(0, d);
    return out;
}

// bidegree-(2,2) piece of the lifted correspondence ideal
inline std::vector<Polynomial<Rational>> biquadratic_piece(const Ideal<Rational>& I,
                                                           const std::vector<int>& avars,
                                                           const std::vector<int>& bvars) {
    const RingPtr<Rational>& r = I.ring;
    std::vector<Polynomial<Rational>> mults;
    for (const auto& g : I.gens) {
        if (g.is_zero()) continue;
        int da = degree_on(g, avars), db = degree_on(g, bvars);
        if (!has_exact_degree_on(g, avars, da) || !has_exact_degree_on(g, bvars, db)) continue;
        if (da > 2 || db > 2) continue;
        for (const auto& am : monomials_on(avars, 2 - da))
            for (const auto& bm : monomials_on(bvars, 2 - db)) mults.push_back(mul_term(g, am * bm, r->one));
    }
    return span_basis(r, mults, 4);
}

}  // namespace scdetail

struct ScorzaInverseOptions {
    MinorStrategy strategy = MinorStrategy::Generic;
    bool verify_round_trip = true;
};

// base_locus: the 15 coefficient forms of the generic Aronhold covariant in
// the ring QQ[c0..c14] (see scorza_base_locus_gens)
inline Polynomial<Rational> scorza_inverse(const SymDetRep<Rational>& rep,
                                           const std::vector<Polynomial<Rational>>& base_locus,
                                           const ScorzaInverseOptions& opt = {}) {
    auto sm = sextic_model(rep);
    const Rational one(1);

    // correspondence ring [a, b, u, v]
    std::vector<std::string> vars{"a0", "a1", "a2", "b0", "b1", "b2"};
    for (int i = 0; i < 4; ++i) vars.push_back("u" + std::to_string(i));
    for (int i = 0; i < 4; ++i) vars.push_back("v" + std::to_string(i));
    RingPtr<Rational> R = PolynomialRing<Rational>::make(vars, one);
    std::vector<int> avars{0, 1, 2}, bvars{3, 4, 5}, uvars{6, 7, 8, 9}, vvars{10, 11, 12, 13};

    std::vector<int> u_up{6, 7, 8, 9}, v_up{10, 11, 12, 13};
    PolyMat<Rational> Mu(4, 3, Polynomial<Rational>(R)), Mv(4, 3, Polynomial<Rational>(R));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) {
            Mu.at(i, j) = map_to_ring(sm.M.at(i, j), R, u_up);
            Mv.at(i, j) = map_to_ring(sm.M.at(i, j), R, v_up);
        }

    std::vector<Polynomial<Rational>> gens;
    for (auto& c : minors(3, Mu)) gens.push_back(c);
    for (auto& c : minors(3, Mv)) gens.push_back(c);
    for (int j = 0; j < 3; ++j) {  // v . M(u) and u . M(v)
        Polynomial<Rational> s1(R), s2(R);
        for (int k = 0; k < 4; ++k) {
            s1 = s1 + poly_var(R, 10 + k) * Mu.at(k, j);
            s2 = s2 + poly_var(R, 6 + k) * Mv.at(k, j);
        }
        gens.push_back(s1);
        gens.push_back(s2);
    }
    for (int i = 0; i < 4; ++i) {  // M(u) a^t and M(v) b^t
        Polynomial<Rational> s1(R), s2(R);
        for (int j = 0; j < 3; ++j) {
            s1 = s1 + Mu.at(i, j) * poly_var(R, j);
            s2 = s2 + Mv.at(i, j) * poly_var(R, 3 + j);
        }
        gens.push_back(s1);
        gens.push_back(s2);
    }

    // saturate away the loci u = 0 and v = 0, then eliminate u, v
    Ideal<Rational> J = make_ideal(R, gens);
    for (int w : uvars) J = saturate_variable(J, w);
    for (int w : vvars) J = saturate_variable(J, w);
    std::vector<int> drop = uvars;
    for (int w : vvars) drop.push_back(w);
    Ideal<Rational> lifted = eliminate_keep_ring(J, drop);

    auto eli6 = scdetail::biquadratic_piece(lifted, avars, bvars);
    if (eli6.size() != 6) math_error("LiftFailure", "the lifted correspondence has " +
                                                        std::to_string(eli6.size()) +
                                                        " biquadratic forms instead of 6");

    // 36-column coordinates: pairs of degree-2 monomials in a and in b
    RingPtr<Rational> a3 = PolynomialRing<Rational>::make({"a0", "a1", "a2"}, one);
    auto mon2 = monomial_basis(a3, 2);  // 6 degree-2 monomials of a 3-variable ring
    auto col_index = [&](const Monomial& m) {
        // split into a-part (vars 0..2) and b-part (vars 3..5)
        Monomial am, bm;
        for (int v = 0; v < 3; ++v) am.e[v] = m.e[v];
        for (int v = 0; v < 3; ++v) bm.e[v] = m.e[3 + v];
        am.deg = bm.deg = 2;
        int ia = -1, ib = -1;
        for (int t = 0; t < 6; ++t) {
            if (mon2[t] == am) ia = t;
            if (mon2[t] == bm) ib = t;
        }
        if (ia < 0 || ib < 0) math_error("MonomialNotInBasis", "biquadratic vectorization");
        return 6 * ia + ib;
    };
    Mat<Rational> maab(6, 36, Rational(0));
    for (int i = 0; i < 6; ++i)
        for (const auto& t : eli6[i].ts) maab.at(i, col_index(t.m)) = t.c;

    // generic-quartic correspondence rows: 2x2 minors of the contracted
    // fourth-derivative tensor of f_c
    std::vector<std::string> cvars;
    for (int i = 0; i < 15; ++i) cvars.push_back("c" + std::to_string(i));
    RingPtr<Rational> cring = PolynomialRing<Rational>::make(cvars, one);
    auto small = PolynomialRing<Rational>::make({"x", "y", "z"}, one);
    auto basis4 = monomial_basis(small, 4);

    // T[i][j][k][l] = sum_m c_m d^4 basis4[m] (symmetric in all indices)
    Polynomial<Rational> T[3][3][3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    std::vector<Term<Rational>> ts;
                    for (int m = 0; m < 15; ++m) {
                        int e[3] = {basis4[m].e[0], basis4[m].e[1], basis4[m].e[2]};
                        int want[3] = {0, 0, 0};
                        ++want[i];
                        ++want[j];
                        ++want[k];
                        ++want[l];
                        long coeff = 1;
                        bool zero = false;
                        for (int v = 0; v < 3; ++v) {
                            if (e[v] < want[v]) {
                                zero = true;
                                break;
                            }
                            for (int s = 0; s < want[v]; ++s) coeff *= (e[v] - s);
                        }
                        if (zero || coeff == 0) continue;
                        ts.push_back({mono_var(m), Rational(coeff)});
                    }
                    T[i][j][k][l] = poly_from_terms(cring, std::move(ts));
                }

    // mon2 exponents identify which (i, i') pairs build each a-monomial
    auto pair_contrib = [&](int t) {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < 3; ++i)
            for (int i2 = 0; i2 < 3; ++i2) {
                Monomial m = mono_var(i) * mono_var(i2);
                if (m == mon2[t]) out.push_back({i, i2});
            }
        return out;
    };
    std::vector<std::vector<std::pair<int, int>>> contribs(6);
    for (int t = 0; t < 6; ++t) contribs[t] = pair_contrib(t);

    // rows of mab: minors over row pairs (k1<k2) and column pairs (l1<l2)
    std::vector<std::array<Polynomial<Rational>, 36>> mab;
    for (int k1 = 0; k1 < 3; ++k1)
        for (int k2 = k1 + 1; k2 < 3; ++k2)
            for (int l1 = 0; l1 < 3; ++l1)
                for (int l2 = l1 + 1; l2 < 3; ++l2) {
                    std::array<Polynomial<Rational>, 36> row;
                    for (auto& p : row) p = Polynomial<Rational>(cring);
                    for (int ta = 0; ta < 6; ++ta)
                        for (int tb = 0; tb < 6; ++tb) {
                            Polynomial<Rational> acc(cring);
                            for (auto [i, i2] : contribs[ta])
                                for (auto [j, j2] : contribs[tb]) {
                                    acc = acc + T[i][j][k1][l1] * T[i2][j2][k2][l2] -
                                          T[i][j][k1][l2] * T[i2][j2][k2][l1];
                                }
                            row[6 * ta + tb] = acc;
                        }
                    mab.push_back(std::move(row));
                }

    // pivot columns per strategy
    std::vector<int> pivots;
    switch (opt.strategy) {
        case MinorStrategy::Generic:
            pivots = {0, 1, 2, 3, 4, 5};
            break;
        case MinorStrategy::Klein:
            pivots = {0, 1, 4, 7, 10, 14};
            break;
        case MinorStrategy::Auto: {
            Mat<Rational> tmp = maab;
            pivots = rref(tmp);
            break;
        }
    }
    if (pivots.size() != 6) math_error("LiftFailure", "pivot selection failed");
    Mat<Rational> msub(6, 6, Rational(0));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) msub.at(i, j) = maab.at(i, pivots[j]);
    if (is_zero(det_bareiss(msub)))
        math_error("LiftFailure", "selected minor columns are singular; try another strategy");
    Mat<Rational> minv = mat_inverse(msub, one);

    // span conditions: for every row r of mab and non-pivot column c,
    //   r[c] - sum_k x_k(c) r[pivots_k] = 0 with x = msub^{-1} maab[:,c]
    std::vector<Polynomial<Rational>> conditions;
    for (int c = 0; c < 36; ++c) {
        bool is_p = false;
        for (int p : pivots) is_p = is_p || (p == c);
        if (is_p) continue;
        std::vector<Rational> x(6, Rational(0));
        for (int i = 0; i < 6; ++i) {
            Rational acc(0);
            for (int j = 0; j < 6; ++j) acc += minv.at(i, j) * maab.at(j, c);
            x[i] = acc;
        }
        for (const auto& row : mab) {
            Polynomial<Rational> cond = row[c];
            for (int k = 0; k < 6; ++k) cond = cond - scale(row[pivots[k]], x[k]);
            if (!cond.is_zero()) conditions.push_back(cond);
        }
    }
    conditions = span_basis(cring, conditions, 2);
    if (conditions.empty()) math_error("NonUniqueFiber", "no fiber conditions found");
    Ideal<Rational> Ic = make_ideal(cring, conditions);

    // saturate away the Scorza base locus; a single generator that does not
    // vanish at the fiber point removes every spurious component
    for (const auto& g : base_locus) {
        Ideal<Rational> S = saturate_element(Ic, g);
        if (is_one_ideal(S)) continue;  // generator vanished at the point
        std::vector<Rational> c;
        try {
            c = point_from_linear_forms(S);
        } catch (const Error&) {
            math_error("NonUniqueFiber",
                       "saturated fiber is not a single reduced point; enlarge the minor selection");
        }
        RingPtr<Rational> out = PolynomialRing<Rational>::make({"x", "y", "z"}, one);
        std::vector<Term<Rational>> ts;
        auto b4 = monomial_basis(out, 4);
        for (int m = 0; m < 15; ++m)
            if (!is_zero(c[m])) ts.push_back({b4[m], c[m]});
        Polynomial<Rational> f = monic(poly_from_terms(out, std::move(ts)));
        if (f.is_zero() || f.degree() != 4)
            math_error("NonUniqueFiber", "fiber point does not define a quartic");
        if (opt.verify_round_trip) {
            Polynomial<Rational> forward = scorza_map(f);
            Polynomial<Rational> target = map_to_ring(rep_determinant(rep), out, {0, 1, 2});
            if (!proportional(forward, monic(target)))
                math_error("NonUniqueFiber", "round trip failed: S(f) does not match det(rep)");
        }
        return f;
    }
    math_error("NonUniqueFiber", "every base-locus generator vanished at the fiber candidates");
}

}  // namespace scorza

#endif
