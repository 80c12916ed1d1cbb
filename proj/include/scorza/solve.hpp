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

#ifndef SCORZA_SOLVE_HPP
#define SCORZA_SOLVE_HPP

#include "scorza/ideal.hpp"

namespace scorza {

// ---------------------------------------------------------------------------
// Dense univariate arithmetic over GF(p), little-endian coefficients.
// ---------------------------------------------------------------------------

namespace updetail {

using UPoly = std::vector<uint64_t>;

inline void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline UPoly mul(const UPoly& a, const UPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<__uint128_t>(a[i]) * b[j]) % p;
    }
    trim(r);
    return r;
}

inline UPoly mod(UPoly a, const UPoly& m, uint64_t p) {
    trim(a);
    uint64_t inv_lead = powmod_u64(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        uint64_t c = mulmod_u64(a.back(), inv_lead, p);
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t s = mulmod_u64(c, m[i], p);
            a[i + shift] = (a[i + shift] + p - s) % p;
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline UPoly gcd(UPoly a, UPoly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint64_t inv = powmod_u64(a.back(), p - 2, p);
        for (auto& c : a) c = mulmod_u64(c, inv, p);
    }
    return a;
}

// a / b for exact division
inline UPoly divexact(UPoly a, const UPoly& b, uint64_t p) {
    trim(a);
    if (a.size() < b.size()) return {};
    UPoly q(a.size() - b.size() + 1, 0);
    uint64_t invl = powmod_u64(b.back(), p - 2, p);
    while (!a.empty() && a.size() >= b.size()) {
        size_t d = a.size() - b.size();
        uint64_t c = mulmod_u64(a.back(), invl, p);
        q[d] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t s = mulmod_u64(c, b[i], p);
            a[i + d] = (a[i + d] + p - s) % p;
        }
        trim(a);
    }
    return q;
}

inline UPoly powmod(UPoly base, Integer e, const UPoly& m, uint64_t p) {
    UPoly r{1};
    base = mod(std::move(base), m, p);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mod(mul(r, base, p), m, p);
        base = mod(mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// all roots in GF(p) of a nonzero polynomial
inline std::vector<uint64_t> roots_mod_p(const UPoly& f0, uint64_t p) {
    UPoly f = f0;
    trim(f);
    std::vector<uint64_t> roots;
    if (f.empty() || f.size() == 1) return roots;
    if (f[0] == 0) {
        roots.push_back(0);
        // divide out x^k
        size_t k = 0;
        while (k < f.size() && f[k] == 0) ++k;
        f.erase(f.begin(), f.begin() + k);
    }
    if (f.size() == 1) return roots;
    // product of the distinct linear factors: gcd(x^p - x, f)
    UPoly xp = powmod({0, 1}, Integer(static_cast<unsigned long>(p)), f, p);
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = (xp[1] + p - 1) % p;  // x^p - x
    UPoly g = gcd(f, xp, p);
    // split g by gcd with (x+a)^((p-1)/2) - 1 over a deterministic shift list
    std::vector<UPoly> stack{g};
    uint64_t shift = 0;
    while (!stack.empty()) {
        UPoly h = stack.back();
        stack.pop_back();
        trim(h);
        if (h.size() <= 1) continue;
        if (h.size() == 2) {
            // h = c0 + c1 x
            uint64_t r = mulmod_u64(p - h[0] % p, powmod_u64(h[1], p - 2, p), p);
            roots.push_back(r % p);
            continue;
        }
        bool split_found = false;
        while (!split_found) {
            UPoly base{shift % p, 1};
            ++shift;
            UPoly w = powmod(base, Integer(static_cast<unsigned long>((p - 1) / 2)), h, p);
            if (w.empty()) continue;
            w[0] = (w[0] + p - 1) % p;  // w - 1
            UPoly g1 = gcd(h, w, p);
            if (g1.size() > 1 && g1.size() < h.size()) {
                stack.push_back(g1);
                stack.push_back(divexact(h, g1, p));
                split_found = true;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// rational reconstruction: find n/d with n ≡ r d (mod m), |n|, d <= sqrt(m/2)
inline bool rational_reconstruct(const Integer& r, const Integer& m, Rational& out) {
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
    Integer v0 = m, v1 = r % m;
    if (sgn(v1) < 0) v1 += m;
    Integer t0 = 0, t1 = 1;
    while (v1 > bound) {
        Integer q = v0 / v1;
        Integer tmp = v0 - q * v1;
        v0 = v1;
        v1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (sgn(t1) == 0) return false;
    Integer den = t1, num = v1;
    if (sgn(den) < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return false;
    out = make_rational(num, den);
    return true;
}

}  // namespace updetail

// fixed deterministic list of ~61-bit primes
inline const std::vector<uint64_t>& solver_primes() {
    static std::vector<uint64_t> ps = [] {
        std::vector<uint64_t> v;
        uint64_t c = (1ull << 61) + 1;
        while (v.size() < 6) {
            if (is_prime_u64(c)) v.push_back(c);
            c += 2;
        }
        return v;
    }();
    return ps;
}

// All rational roots of a univariate polynomial with rational coefficients
// (dense, little-endian). Roots are located modulo large primes and lifted by
// rational reconstruction (with a two-prime CRT fallback), then verified
// exactly.
inline std::vector<Rational> rational_roots(const std::vector<Rational>& poly) {
    std::vector<Rational> coeffs = poly;
    while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
    std::vector<Rational> roots;
    if (coeffs.empty() || coeffs.size() == 1) return roots;  // zero handled by caller
    // integer scaling
    Integer l(1);
    for (const auto& q : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> zc;
    for (const auto& q : coeffs) zc.push_back(Integer(q * Rational(l)));

    auto eval_zero = [&](const Rational& r) {
        Rational acc(0), pw(1);
        for (const auto& c : zc) {
            acc += Rational(c) * pw;
            pw *= r;
        }
        return sgn(acc) == 0;
    };
    auto push_unique = [&](const Rational& r) {
        for (const auto& q : roots)
            if (q == r) return;
        roots.push_back(r);
    };

    if (sgn(zc[0]) == 0) push_unique(Rational(0));

    const auto& primes = solver_primes();
    std::vector<std::pair<uint64_t, std::vector<uint64_t>>> residue_sets;
    for (uint64_t p : primes) {
        Integer lead = zc.back() % Integer(static_cast<unsigned long>(p));
        if (sgn(lead) == 0) continue;  // bad prime
        updetail::UPoly fp(zc.size());
        for (size_t i = 0; i < zc.size(); ++i) {
            Integer m = zc[i] % Integer(static_cast<unsigned long>(p));
            if (sgn(m) < 0) m += Integer(static_cast<unsigned long>(p));
            fp[i] = m.get_ui();
        }
        auto rs = updetail::roots_mod_p(fp, p);
        residue_sets.push_back({p, rs});
        if (residue_sets.size() == 2) break;
    }
    if (residue_sets.empty()) return roots;

    // single-prime lifts
    for (const auto& [p, rs] : residue_sets) {
        Integer m(static_cast<unsigned long>(p));
        for (uint64_t r : rs) {
            Rational cand;
            if (updetail::rational_reconstruct(Integer(static_cast<unsigned long>(r)), m, cand) &&
                eval_zero(cand))
                push_unique(cand);
        }
    }
    // two-prime CRT fallback for large-height roots
    if (residue_sets.size() == 2) {
        auto& [p1, rs1] = residue_sets[0];
        auto& [p2, rs2] = residue_sets[1];
        Integer m1(static_cast<unsigned long>(p1)), m2(static_cast<unsigned long>(p2));
        Integer m = m1 * m2;
        Integer inv;  // m1^{-1} mod m2
        mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
        for (uint64_t a : rs1)
            for (uint64_t b : rs2) {
                Integer A(static_cast<unsigned long>(a)), B(static_cast<unsigned long>(b));
                Integer t = ((B - A) * inv) % m2;
                if (sgn(t) < 0) t += m2;
                Integer crt = A + m1 * t;
                Rational cand;
                if (updetail::rational_reconstruct(crt, m, cand) && eval_zero(cand)) push_unique(cand);
            }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Rational points of zero-dimensional ideals over QQ
// ---------------------------------------------------------------------------

namespace updetail {

inline std::vector<Rational> univariate_in_last(const std::vector<Polynomial<Rational>>& gens, int var,
                                                int nvars) {
    for (const auto& g : gens) {
        bool uni = true;
        for (const auto& t : g.ts)
            for (int v = 0; v < nvars; ++v)
                if (v != var && t.m.e[v]) uni = false;
        if (uni && !g.is_zero()) {
            std::vector<Rational> c(degree_in(g, var) + 1, Rational(0));
            for (const auto& t : g.ts) c[t.m.e[var]] = t.c;
            return c;
        }
    }
    return {};
}

}  // namespace updetail

// All rational points of an affine zero-dimensional ideal, by lex
// triangularization and back substitution. Points whose last-coordinate
// minimal polynomial has no rational root are silently dropped (only the
// rational points are requested).
inline std::vector<std::vector<Rational>> rational_points_affine(const Ideal<Rational>& I) {
    const int n = I.ring->nvars();
    std::vector<std::vector<Rational>> out;
    // lex order over the ring's variables
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    MonomialOrder lex;
    lex.blocks.push_back({all, OrderBlock::Kind::Lex});
    auto gb = groebner_with_order(I, lex);
    if (gb.empty()) math_error("NoSolution", "solver needs a zero-dimensional ideal");
    if (gb.size() == 1 && gb[0].degree() == 0) return out;  // unit ideal: no points

    if (n == 1) {
        std::vector<Rational> c = updetail::univariate_in_last(gb, 0, 1);
        if (c.empty()) math_error("NoSolution", "ideal is not zero-dimensional");
        for (const auto& r : rational_roots(c)) out.push_back({r});
        return out;
    }

    std::vector<Rational> u = updetail::univariate_in_last(gb, n - 1, n);
    if (u.empty()) math_error("NoSolution", "ideal is not zero-dimensional");
    std::vector<std::string> subvars(I.ring->vars.begin(), I.ring->vars.end() - 1);
    RingPtr<Rational> sub = PolynomialRing<Rational>::make(subvars, Rational(1));

    for (const Rational& rho : rational_roots(u)) {
        // substitute the last variable and recurse
        std::vector<Polynomial<Rational>> gens2;
        std::vector<Polynomial<Rational>> images;
        for (int i = 0; i + 1 < n; ++i) images.push_back(poly_var(sub, i));
        images.push_back(poly_const(sub, rho));
        for (const auto& g : gb) {
            Polynomial<Rational> h = substitute(g, images);
            if (!h.is_zero()) gens2.push_back(h);
        }
        Ideal<Rational> J = make_ideal(sub, gens2);
        if (gens2.empty()) math_error("NoSolution", "unexpected free subvariety");
        for (auto& pt : rational_points_affine(J)) {
            pt.push_back(rho);
            out.push_back(std::move(pt));
        }
    }
    return out;
}

// Rational points of a projectively zero-dimensional homogeneous ideal,
// normalized so the first nonzero coordinate is 1. Charts are scanned in
// variable order, fixing x_v = 1 and x_u = 0 for u < v.
inline std::vector<std::vector<Rational>> rational_points_projective(const Ideal<Rational>& I) {
    const int n = I.ring->nvars();
    std::vector<std::vector<Rational>> out;
    for (int v = 0; v < n; ++v) {
        std::vector<Polynomial<Rational>> gens = I.gens;
        for (int u = 0; u < v; ++u) gens.push_back(poly_var(I.ring, u));
        gens.push_back(poly_var(I.ring, v) - poly_int(I.ring, 1));
        Ideal<Rational> J = make_ideal(I.ring, gens);
        if (is_one_ideal(J)) continue;
        for (auto& pt : rational_points_affine(J)) out.push_back(std::move(pt));
    }
    return out;
}

// coordinates of the single point cut out by the linear forms in the ideal's
// Groebner basis (used for "eighth base point"-style extractions)
template <class K>
std::vector<K> point_from_linear_forms(const Ideal<K>& I) {
    const auto& gb = groebner(I);
    const int n = I.ring->nvars();
    std::vector<const Polynomial<K>*> lin;
    for (const auto& g : gb)
        if (g.degree() == 1 && is_homogeneous(g)) lin.push_back(&g);
    if (static_cast<int>(lin.size()) != n - 1)
        math_error("DegenerateConfiguration", "ideal does not cut a single reduced point");
    Mat<K> m(n - 1, n, from_int(0, I.ring->one));
    for (size_t i = 0; i < lin.size(); ++i)
        for (const auto& t : lin[i]->ts)
            for (int v = 0; v < n; ++v)
                if (t.m.e[v]) m.at(static_cast<int>(i), v) = t.c;
    Mat<K> ker = kernel_basis(m, I.ring->one);
    if (ker.cols != 1) math_error("DegenerateConfiguration", "linear system does not cut a point");
    std::vector<K> pt(n, from_int(0, I.ring->one));
    for (int v = 0; v < n; ++v) pt[v] = ker.at(v, 0);
    return pt;
}

}  // namespace scorza

#endif
