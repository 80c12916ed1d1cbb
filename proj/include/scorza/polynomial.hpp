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

#ifndef SCORZA_POLYNOMIAL_HPP
#define SCORZA_POLYNOMIAL_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "scorza/fields.hpp"
#include "scorza/monomial.hpp"

namespace scorza {

template <class K>
struct Term {
    Monomial m;
    K c;
};

template <class K>
struct PolynomialRing;

template <class K>
using RingPtr = std::shared_ptr<const PolynomialRing<K>>;

template <class K>
struct PolynomialRing {
    std::vector<std::string> vars;
    MonomialOrder ord;
    K one;

    int nvars() const { return static_cast<int>(vars.size()); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    static RingPtr<K> make(std::vector<std::string> vars, K one) {
        return make(std::move(vars), std::move(one), MonomialOrder{});
    }

    static RingPtr<K> make(std::vector<std::string> vars, K one, MonomialOrder ord) {
        if (static_cast<int>(vars.size()) > kMaxVars)
            usage_error("DimensionMismatch", "too many ring variables");
        for (size_t i = 0; i < vars.size(); ++i)
            for (size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) usage_error("SyntaxError", "duplicate ring variable " + vars[i]);
        auto r = std::make_shared<PolynomialRing<K>>();
        if (ord.blocks.empty()) ord = MonomialOrder::grevlex(static_cast<int>(vars.size()));
        ord.finalize(static_cast<int>(vars.size()));
        r->vars = std::move(vars);
        r->ord = std::move(ord);
        r->one = std::move(one);
        return r;
    }
};

template <class K>
void check_same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
    if (a == b) return;
    if (!a || !b || a->vars != b->vars)
        math_error("DimensionMismatch", "operands live in different rings");
}

// Sparse polynomial: terms strictly descending in the ring's order.
template <class K>
struct Polynomial {
    RingPtr<K> ring;
    std::vector<Term<K>> ts;

    Polynomial() = default;
    explicit Polynomial(RingPtr<K> r) : ring(std::move(r)) {}

    bool is_zero() const { return ts.empty(); }
    int nterms() const { return static_cast<int>(ts.size()); }

    const Monomial& leading_monomial() const { return ts.front().m; }
    const K& leading_coefficient() const { return ts.front().c; }

    int degree() const {  // max total degree, -1 for 0
        int d = -1;
        for (const auto& t : ts) d = std::max(d, static_cast<int>(t.m.deg));
        return d;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.ts.size() != b.ts.size()) return false;
        for (size_t i = 0; i < a.ts.size(); ++i)
            if (a.ts[i].m != b.ts[i].m || !(a.ts[i].c == b.ts[i].c)) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
};

// --- construction -----------------------------------------------------------

template <class K>
Polynomial<K> poly_zero(const RingPtr<K>& r) {
    return Polynomial<K>(r);
}

template <class K>
void sort_and_combine(const RingPtr<K>& r, std::vector<Term<K>>& v) {
    std::sort(v.begin(), v.end(),
              [&](const Term<K>& a, const Term<K>& b) { return r->ord.greater(a.m, b.m); });
    size_t out = 0;
    for (size_t i = 0; i < v.size();) {
        Monomial m = v[i].m;
        K c = v[i].c;
        size_t j = i + 1;
        while (j < v.size() && v[j].m == m) {
            c = c + v[j].c;
            ++j;
        }
        if (!is_zero(c)) {
            v[out].m = m;
            v[out].c = std::move(c);
            ++out;
        }
        i = j;
    }
    v.resize(out);
}

template <class K>
Polynomial<K> poly_from_terms(const RingPtr<K>& r, std::vector<Term<K>> v) {
    sort_and_combine(r, v);
    Polynomial<K> p(r);
    p.ts = std::move(v);
    return p;
}

template <class K>
Polynomial<K> poly_const(const RingPtr<K>& r, const K& c) {
    Polynomial<K> p(r);
    if (!is_zero(c)) p.ts.push_back({mono_one(), c});
    return p;
}

template <class K>
Polynomial<K> poly_int(const RingPtr<K>& r, long n) {
    return poly_const(r, from_int(n, r->one));
}

template <class K>
Polynomial<K> poly_var(const RingPtr<K>& r, int i, int power = 1) {
    if (i < 0 || i >= r->nvars()) usage_error("DimensionMismatch", "variable index out of range");
    Polynomial<K> p(r);
    p.ts.push_back({mono_var(i, power), r->one});
    return p;
}

template <class K>
Polynomial<K> poly_monomial(const RingPtr<K>& r, const Monomial& m, const K& c) {
    Polynomial<K> p(r);
    if (!is_zero(c)) p.ts.push_back({m, c});
    return p;
}

// --- arithmetic --------------------------------------------------------------

template <class K>
Polynomial<K> operator+(const Polynomial<K>& a, const Polynomial<K>& b) {
    check_same_ring(a.ring, b.ring);
    const auto& ord = a.ring->ord;
    Polynomial<K> r(a.ring);
    r.ts.reserve(a.ts.size() + b.ts.size());
    size_t i = 0, j = 0;
    while (i < a.ts.size() && j < b.ts.size()) {
        int c = ord.compare(a.ts[i].m, b.ts[j].m);
        if (c > 0)
            r.ts.push_back(a.ts[i++]);
        else if (c < 0)
            r.ts.push_back(b.ts[j++]);
        else {
            K s = a.ts[i].c + b.ts[j].c;
            if (!is_zero(s)) r.ts.push_back({a.ts[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < a.ts.size()) r.ts.push_back(a.ts[i++]);
    while (j < b.ts.size()) r.ts.push_back(b.ts[j++]);
    return r;
}

template <class K>
Polynomial<K> operator-(const Polynomial<K>& a) {
    Polynomial<K> r = a;
    for (auto& t : r.ts) t.c = -t.c;
    return r;
}

template <class K>
Polynomial<K> operator-(const Polynomial<K>& a, const Polynomial<K>& b) {
    return a + (-b);
}

template <class K>
Polynomial<K> scale(const Polynomial<K>& a, const K& c) {
    if (is_zero(c)) return Polynomial<K>(a.ring);
    Polynomial<K> r = a;
    for (auto& t : r.ts) t.c = t.c * c;
    size_t out = 0;  // products can vanish only in characteristic p via context-free zeros; stay safe
    for (size_t i = 0; i < r.ts.size(); ++i)
        if (!is_zero(r.ts[i].c)) r.ts[out++] = r.ts[i];
    r.ts.resize(out);
    return r;
}

template <class K>
Polynomial<K> mul_term(const Polynomial<K>& a, const Monomial& m, const K& c) {
    if (is_zero(c)) return Polynomial<K>(a.ring);
    Polynomial<K> r(a.ring);
    r.ts.reserve(a.ts.size());
    for (const auto& t : a.ts) {
        K p = t.c * c;
        if (!is_zero(p)) r.ts.push_back({t.m * m, std::move(p)});
    }
    return r;
}

template <class K>
Polynomial<K> operator*(const Polynomial<K>& a, const Polynomial<K>& b) {
    check_same_ring(a.ring, b.ring);
    if (a.is_zero() || b.is_zero()) return Polynomial<K>(a.ring);
    if (a.ts.size() == 1) return mul_term(b, a.ts[0].m, a.ts[0].c);
    if (b.ts.size() == 1) return mul_term(a, b.ts[0].m, b.ts[0].c);
    std::vector<Term<K>> v;
    v.reserve(a.ts.size() * b.ts.size());
    for (const auto& ta : a.ts)
        for (const auto& tb : b.ts) {
            K p = ta.c * tb.c;
            if (!is_zero(p)) v.push_back({ta.m * tb.m, std::move(p)});
        }
    return poly_from_terms(a.ring, std::move(v));
}

template <class K>
Polynomial<K> poly_pow(const Polynomial<K>& a, int e) {
    Polynomial<K> r = poly_const(a.ring, a.ring->one);
    Polynomial<K> base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// --- structure ---------------------------------------------------------------

template <class K>
bool is_homogeneous(const Polynomial<K>& f) {
    if (f.ts.empty()) return true;
    uint16_t d = f.ts[0].m.deg;
    for (const auto& t : f.ts)
        if (t.m.deg != d) return false;
    return true;
}

template <class K>
Polynomial<K> homogeneous_component(const Polynomial<K>& f, int d) {
    Polynomial<K> r(f.ring);
    for (const auto& t : f.ts)
        if (t.m.deg == d) r.ts.push_back(t);
    return r;
}

template <class K>
int degree_in(const Polynomial<K>& f, int var) {
    int d = 0;
    for (const auto& t : f.ts) d = std::max<int>(d, t.m.e[var]);
    return d;
}

template <class K>
int degree_on(const Polynomial<K>& f, const std::vector<int>& vars) {
    int d = 0;
    for (const auto& t : f.ts) {
        int s = 0;
        for (int v : vars) s += t.m.e[v];
        d = std::max(d, s);
    }
    return d;
}

// every term has the given degree on the given variables
template <class K>
bool has_exact_degree_on(const Polynomial<K>& f, const std::vector<int>& vars, int d) {
    for (const auto& t : f.ts) {
        int s = 0;
        for (int v : vars) s += t.m.e[v];
        if (s != d) return false;
    }
    return true;
}

template <class K>
bool involves_var(const Polynomial<K>& f, int var) {
    for (const auto& t : f.ts)
        if (t.m.e[var]) return true;
    return false;
}

// --- calculus ----------------------------------------------------------------

template <class K>
Polynomial<K> diff(const Polynomial<K>& f, int var) {
    Polynomial<K> r(f.ring);
    r.ts.reserve(f.ts.size());
    for (const auto& t : f.ts) {
        int e = t.m.e[var];
        if (e == 0) continue;
        K c = t.c * from_int(e, f.ring->one);
        if (is_zero(c)) continue;
        Monomial m = t.m;
        m.e[var] = static_cast<uint8_t>(e - 1);
        m.deg = static_cast<uint16_t>(m.deg - 1);
        r.ts.push_back({m, std::move(c)});
    }
    // single-variable differentiation preserves the term order
    return poly_from_terms(f.ring, std::move(r.ts));
}

// Apply one monomial differential operator \partial^a (positional variables).
template <class K>
bool apply_diff_monomial(const Monomial& a, const Term<K>& t, const K& one, Term<K>& out) {
    Monomial m = t.m;
    K c = t.c;
    for (int i = 0; i < kMaxVars; ++i) {
        int k = a.e[i];
        if (!k) continue;
        int e = m.e[i];
        if (e < k) return false;
        long fall = 1;
        for (int j = 0; j < k; ++j) fall *= (e - j);
        c = c * from_int(fall, one);
        if (is_zero(c)) return false;
        m.e[i] = static_cast<uint8_t>(e - k);
        m.deg = static_cast<uint16_t>(m.deg - k);
    }
    out = {m, std::move(c)};
    return true;
}

// Differential contraction: the operator's i-th variable acts as d/dx_i on
// the target's i-th variable, extended bilinearly.
template <class K>
Polynomial<K> diff_contract(const Polynomial<K>& op, const Polynomial<K>& target) {
    if (op.ring->nvars() > target.ring->nvars())
        math_error("VariableCountMismatch", "operator has more variables than target");
    std::vector<Term<K>> v;
    for (const auto& a : op.ts)
        for (const auto& t : target.ts) {
            Term<K> r;
            if (apply_diff_monomial(a.m, t, target.ring->one, r)) {
                r.c = r.c * a.c;
                if (!is_zero(r.c)) v.push_back(std::move(r));
            }
        }
    return poly_from_terms(target.ring, std::move(v));
}

// Polar P_a(f) = sum a_i d f/dx_i over the first coords.size() variables.
template <class K>
Polynomial<K> polar(const std::vector<K>& a, const Polynomial<K>& f) {
    if (!is_homogeneous(f) || f.degree() < 1)
        math_error("NonHomogeneousInput", "polar needs a homogeneous form of positive degree");
    Polynomial<K> r(f.ring);
    for (size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        r = r + scale(diff(f, static_cast<int>(i)), a[i]);
    }
    return r;
}

// --- substitution and evaluation ----------------------------------------------

// f(images[0], ..., images[n-1]) in the images' ring; caches variable powers.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, const std::vector<Polynomial<K>>& images) {
    if (static_cast<int>(images.size()) != f.ring->nvars())
        math_error("DimensionMismatch", "need one image per variable");
    if (f.ts.empty()) {
        if (images.empty()) math_error("DimensionMismatch", "empty substitution on empty ring");
    }
    RingPtr<K> out_ring = images.empty() ? f.ring : images[0].ring;
    std::vector<std::vector<Polynomial<K>>> pows(images.size());
    for (size_t i = 0; i < images.size(); ++i) pows[i].push_back(poly_const(out_ring, out_ring->one));
    auto power = [&](size_t i, int e) -> const Polynomial<K>& {
        while (static_cast<int>(pows[i].size()) <= e) pows[i].push_back(pows[i].back() * images[i]);
        return pows[i][e];
    };
    Polynomial<K> acc(out_ring);
    for (const auto& t : f.ts) {
        Polynomial<K> term = poly_const(out_ring, t.c);
        for (size_t i = 0; i < images.size(); ++i)
            if (t.m.e[i]) term = term * power(i, t.m.e[i]);
        acc = acc + term;
    }
    return acc;
}

template <class K>
K evaluate(const Polynomial<K>& f, const std::vector<K>& point) {
    if (static_cast<int>(point.size()) != f.ring->nvars())
        math_error("DimensionMismatch", "need one coordinate per variable");
    K acc = from_int(0, f.ring->one);
    for (const auto& t : f.ts) {
        K v = t.c;
        for (size_t i = 0; i < point.size(); ++i)
            for (int j = 0; j < t.m.e[i]; ++j) v = v * point[i];
        acc = acc + v;
    }
    return acc;
}

// Move a polynomial to another ring; var_map[i] is the index in the new ring
// of the old variable i, or -1 when the variable must not occur.
template <class K>
Polynomial<K> map_to_ring(const Polynomial<K>& f, const RingPtr<K>& nr, const std::vector<int>& var_map) {
    std::vector<Term<K>> v;
    v.reserve(f.ts.size());
    for (const auto& t : f.ts) {
        Monomial m;
        int d = 0;
        for (int i = 0; i < f.ring->nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (var_map[i] < 0) math_error("DimensionMismatch", "variable not present in target ring");
            m.e[var_map[i]] = t.m.e[i];
            d += t.m.e[i];
        }
        m.deg = static_cast<uint16_t>(d);
        v.push_back({m, t.c});
    }
    return poly_from_terms(nr, std::move(v));
}

// convenience: match variables by name
template <class K>
Polynomial<K> map_to_ring(const Polynomial<K>& f, const RingPtr<K>& nr) {
    std::vector<int> vm(f.ring->nvars());
    for (int i = 0; i < f.ring->nvars(); ++i) vm[i] = nr->var_index(f.ring->vars[i]);
    return map_to_ring(f, nr, vm);
}

// --- bases and coordinates -----------------------------------------------------

namespace detail {
inline void enumerate_exponents(int nvars, int var, int rem, Monomial& cur, std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur.e[var] = static_cast<uint8_t>(rem);
        cur.deg = 0;
        for (int i = 0; i < nvars; ++i) cur.deg = static_cast<uint16_t>(cur.deg + cur.e[i]);
        out.push_back(cur);
        cur.e[var] = 0;
        return;
    }
    for (int e = rem; e >= 0; --e) {
        cur.e[var] = static_cast<uint8_t>(e);
        enumerate_exponents(nvars, var + 1, rem - e, cur, out);
    }
    cur.e[var] = 0;
}
}  // namespace detail

// All monomials of degree d, descending in the ring's order.
template <class K>
std::vector<Monomial> monomial_basis(const RingPtr<K>& r, int d) {
    std::vector<Monomial> out;
    Monomial cur;
    detail::enumerate_exponents(r->nvars(), 0, d, cur, out);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return r->ord.greater(a, b); });
    return out;
}

template <class K>
std::vector<K> coefficients_against_basis(const Polynomial<K>& f, const std::vector<Monomial>& basis) {
    std::vector<K> v(basis.size(), from_int(0, f.ring->one));
    for (const auto& t : f.ts) {
        bool found = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i] == t.m) {
                v[i] = t.c;
                found = true;
                break;
            }
        }
        if (!found) math_error("MonomialNotInBasis", "monomial of f outside the given basis");
    }
    return v;
}

template <class K>
Polynomial<K> poly_from_coefficients(const RingPtr<K>& r, const std::vector<Monomial>& basis,
                                     const std::vector<K>& v) {
    std::vector<Term<K>> ts;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!is_zero(v[i])) ts.push_back({basis[i], v[i]});
    return poly_from_terms(r, std::move(ts));
}

// --- normalization --------------------------------------------------------------

template <class K>
Polynomial<K> monic(const Polynomial<K>& f) {
    if (f.is_zero()) return f;
    return scale(f, field_inv(f.leading_coefficient()));
}

// exact scalar proportionality: g = lambda * f for some nonzero lambda
template <class K>
bool proportional(const Polynomial<K>& f, const Polynomial<K>& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.ts.size() != g.ts.size()) return false;
    K lambda = g.leading_coefficient() * field_inv(f.leading_coefficient());
    for (size_t i = 0; i < f.ts.size(); ++i) {
        if (f.ts[i].m != g.ts[i].m) return false;
        if (!(f.ts[i].c * lambda == g.ts[i].c)) return false;
    }
    return true;
}

inline void primitive_scale_coeffs(std::vector<Rational*>& cs) {
    if (cs.empty()) return;
    Integer l(1), g(0);
    for (auto* q : cs) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den().get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q->get_num().get_mpz_t());
    }
    if (sgn(g) == 0) return;
    Rational s = make_rational(l, g);
    if (sgn(*cs.front()) < 0) s = -s;
    for (auto* q : cs) *q *= s;
}

// Content normalization used to keep Groebner intermediates small: integer
// primitive with positive lead over QQ and number fields, monic over GF(p).
inline void primitive_part(Polynomial<Rational>& f) {
    std::vector<Rational*> cs;
    cs.reserve(f.ts.size());
    for (auto& t : f.ts) cs.push_back(&t.c);
    primitive_scale_coeffs(cs);
}

inline void primitive_part(Polynomial<Fp>& f) {
    if (f.is_zero()) return;
    Fp inv = field_inv(f.leading_coefficient());
    for (auto& t : f.ts) t.c = t.c * inv;
}

inline void primitive_part(Polynomial<NF>& f) {
    std::vector<Rational*> cs;
    for (auto& t : f.ts)
        for (auto& q : t.c.c) cs.push_back(&q);
    // reuse the rational scaling; sign convention from the first nonzero coordinate
    std::vector<Rational*> nonzero;
    for (auto* q : cs)
        if (sgn(*q) != 0) nonzero.push_back(q);
    if (nonzero.empty()) return;
    Integer l(1), g(0);
    for (auto* q : nonzero) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den().get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q->get_num().get_mpz_t());
    }
    Rational s = make_rational(l, g);
    if (sgn(*nonzero.front()) < 0) s = -s;
    for (auto* q : cs) *q *= s;
}

// exact division: q with f = q*g; ExactDivisionFailure otherwise
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& f, const Polynomial<K>& g) {
    check_same_ring(f.ring, g.ring);
    if (g.is_zero()) math_error("ExactDivisionFailure", "division by zero polynomial");
    Polynomial<K> rem = f, quot(f.ring);
    K ginv = field_inv(g.leading_coefficient());
    while (!rem.is_zero()) {
        if (!divides(g.leading_monomial(), rem.leading_monomial()))
            math_error("ExactDivisionFailure", "leading term not divisible");
        Monomial m = quotient(rem.leading_monomial(), g.leading_monomial());
        K c = rem.leading_coefficient() * ginv;
        quot.ts.push_back({m, c});
        rem = rem - mul_term(g, m, c);
    }
    return poly_from_terms(f.ring, std::move(quot.ts));
}

// --- geobucket (fast repeated addition during reduction) -------------------------

template <class K>
class Geobucket {
   public:
    explicit Geobucket(RingPtr<K> ring) : ring_(std::move(ring)) {}

    void add(std::vector<Term<K>> v) {
        if (v.empty()) return;
        size_t i = 0;
        while (cap(i) < v.size()) ++i;
        while (true) {
            if (i >= b_.size()) b_.resize(i + 1);
            if (b_[i].live() == 0) {
                b_[i].t = std::move(v);
                b_[i].head = 0;
            } else {
                merge_into(b_[i], v);
            }
            if (b_[i].live() <= cap(i)) break;
            v.assign(b_[i].t.begin() + b_[i].head, b_[i].t.end());
            b_[i].t.clear();
            b_[i].head = 0;
            ++i;
        }
    }

    void add(const Polynomial<K>& p) { add(std::vector<Term<K>>(p.ts)); }

    // removes and returns the leading term; false when empty
    bool pop_leading(Term<K>& out) {
        while (true) {
            int best = -1;
            for (size_t i = 0; i < b_.size(); ++i) {
                if (b_[i].live() == 0) continue;
                if (best < 0 || ring_->ord.greater(b_[i].front().m, b_[best].front().m)) {
                    best = static_cast<int>(i);
                }
            }
            if (best < 0) return false;
            Monomial m = b_[best].front().m;
            K c = from_int(0, ring_->one);
            for (auto& bucket : b_) {
                if (bucket.live() && bucket.front().m == m) {
                    c = c + bucket.front().c;
                    ++bucket.head;
                }
            }
            if (!is_zero(c)) {
                out = {m, std::move(c)};
                return true;
            }
        }
    }

   private:
    struct Bucket {
        std::vector<Term<K>> t;
        size_t head = 0;
        size_t live() const { return t.size() - head; }
        const Term<K>& front() const { return t[head]; }
    };

    static size_t cap(size_t i) {
        size_t c = 16;
        for (size_t j = 0; j < i; ++j) c *= 4;
        return c;
    }

    void merge_into(Bucket& dst, const std::vector<Term<K>>& b) {
        std::vector<Term<K>> r;
        r.reserve(dst.live() + b.size());
        size_t i = dst.head, j = 0;
        const auto& a = dst.t;
        while (i < a.size() && j < b.size()) {
            int c = ring_->ord.compare(a[i].m, b[j].m);
            if (c > 0)
                r.push_back(a[i++]);
            else if (c < 0)
                r.push_back(b[j++]);
            else {
                K s = a[i].c + b[j].c;
                if (!is_zero(s)) r.push_back({a[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        while (i < a.size()) r.push_back(a[i++]);
        while (j < b.size()) r.push_back(b[j++]);
        dst.t = std::move(r);
        dst.head = 0;
    }

    RingPtr<K> ring_;
    std::vector<Bucket> b_;
};

// --- printing (debug; the canonical text formats live with the CLI) --------------

template <class K>
std::string poly_to_string(const Polynomial<K>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.ts) {
        std::string cs = to_string(t.c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool needs_coeff = t.m.is_one() || cs != "1";
        bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos ||
                         cs.find('*') != std::string::npos;
        if (needs_coeff) {
            if (composite && !t.m.is_one())
                os << "(" << cs << ")";
            else
                os << cs;
        }
        bool printed_var = false;
        for (int i = 0; i < f.ring->nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (needs_coeff || printed_var) os << "*";
            os << f.ring->vars[i];
            if (t.m.e[i] > 1) os << "^" << static_cast<int>(t.m.e[i]);
            printed_var = true;
            needs_coeff = true;  // separator from now on
        }
        (void)printed_var;
    }
    return os.str();
}

}  // namespace scorza

#endif
