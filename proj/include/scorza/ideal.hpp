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

#ifndef SCORZA_IDEAL_HPP
#define SCORZA_IDEAL_HPP

#include <map>
#include <optional>
#include <unordered_map>

#include "scorza/matrix.hpp"
#include "scorza/polynomial.hpp"

namespace scorza {

template <class K>
struct Ideal {
    RingPtr<K> ring;
    std::vector<Polynomial<K>> gens;
    mutable std::shared_ptr<std::vector<Polynomial<K>>> gb;  // reduced GB for ring->ord

    Ideal() = default;
    Ideal(RingPtr<K> r, std::vector<Polynomial<K>> g) : ring(std::move(r)), gens(std::move(g)) {}
};

template <class K>
Ideal<K> make_ideal(const RingPtr<K>& r, std::vector<Polynomial<K>> gens) {
    std::vector<Polynomial<K>> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(std::move(p));
    return Ideal<K>(r, std::move(g));
}

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

namespace gbdetail {

template <class K>
struct Reducer {
    Monomial lt;
    uint64_t mask = 0;  // divmask of lt
    K lc;
    std::vector<Term<K>> tail;  // g minus its leading term
};

template <class K>
Reducer<K> make_reducer(const Polynomial<K>& g) {
    Reducer<K> r;
    r.lt = g.leading_monomial();
    r.mask = divmask(r.lt);
    r.lc = g.leading_coefficient();
    r.tail.assign(g.ts.begin() + 1, g.ts.end());
    return r;
}

// Full normal form against an explicit reducer list; deterministic (first
// reducer whose leading term divides wins). skip marks one disabled index
// (used by the final auto-reduction).
template <class K>
Polynomial<K> normal_form_list(const Polynomial<K>& f, const std::vector<Reducer<K>>& red,
                               const RingPtr<K>& ring, int skip = -1) {
    Geobucket<K> bucket(ring);
    bucket.add(f);
    std::vector<Term<K>> out;
    Term<K> t;
    while (bucket.pop_leading(t)) {
        const uint64_t tmask = divmask(t.m);
        // among the dividing reducers prefer the shortest tail (less fill-in),
        // ties by insertion index
        const Reducer<K>* use = nullptr;
        for (size_t i = 0; i < red.size(); ++i) {
            const auto& r = red[i];
            if ((r.mask & ~tmask) != 0) continue;
            if (static_cast<int>(i) == skip) continue;
            if (r.lt.deg <= t.m.deg && divides(r.lt, t.m)) {
                if (!use || r.tail.size() < use->tail.size()) use = &r;
                if (use->tail.empty()) break;
            }
        }
        if (!use) {
            out.push_back(t);
            continue;
        }
        K c = t.c * field_inv(use->lc);
        Monomial m = quotient(t.m, use->lt);
        if (!use->tail.empty()) {
            std::vector<Term<K>> sub;
            sub.reserve(use->tail.size());
            for (const auto& tt : use->tail) {
                K cc = -(tt.c * c);
                if (!is_zero(cc)) sub.push_back({tt.m * m, std::move(cc)});
            }
            bucket.add(std::move(sub));
        }
    }
    Polynomial<K> r(ring);
    r.ts = std::move(out);
    return r;
}

struct SPair {
    int i, j;
    Monomial lcm;
    long wdeg;  // weighted degree of the lcm (grading-aware selection)
    long seq;
};

inline long weighted_degree(const Monomial& m, const std::vector<long>& weights) {
    if (weights.empty()) return m.deg;
    long d = 0;
    for (int i = 0; i < kMaxVars; ++i)
        if (m.e[i]) d += weights[i] * m.e[i];
    return d;
}

}  // namespace gbdetail

// Buchberger completion with the Gebauer-Moeller pair criteria.
// Selection: minimal lcm degree, ties by creation sequence. Intermediate
// elements are content-normalized to keep coefficients small.
template <class K>
std::vector<Polynomial<K>> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& input) {
    using gbdetail::Reducer;
    using gbdetail::SPair;

    std::vector<Polynomial<K>> G;
    std::vector<Reducer<K>> red;
    std::vector<bool> redundant;
    std::vector<SPair> pairs;
    long seq = 0;

    auto add_element = [&](Polynomial<K> h) {
        const int t = static_cast<int>(G.size());
        const Monomial& lth = h.leading_monomial();

        // Gebauer-Moeller: prune old pairs via the chain criterion
        {
            std::vector<SPair> kept;
            kept.reserve(pairs.size());
            for (auto& p : pairs) {
                bool drop = divides(lth, p.lcm) && lcm(G[p.i].leading_monomial(), lth) != p.lcm &&
                            lcm(G[p.j].leading_monomial(), lth) != p.lcm;
                if (!drop) kept.push_back(std::move(p));
            }
            pairs = std::move(kept);
        }

        // candidate new pairs
        struct Cand {
            int i;
            Monomial l;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < t; ++i) {
            if (redundant[i]) continue;
            const Monomial& lti = G[i].leading_monomial();
            cands.push_back({i, lcm(lti, lth), coprime(lti, lth)});
        }
        // drop candidates whose lcm is a proper multiple of another candidate's lcm
        std::vector<bool> keep(cands.size(), true);
        for (size_t a = 0; a < cands.size(); ++a) {
            if (!keep[a]) continue;
            for (size_t b = 0; b < cands.size(); ++b) {
                if (a == b || !keep[a]) continue;
                if (!keep[b]) continue;
                if (cands[b].l != cands[a].l && divides(cands[b].l, cands[a].l)) keep[a] = false;
            }
        }
        // among equal lcms keep the first; prefer a coprime representative (it gets discarded)
        for (size_t a = 0; a < cands.size(); ++a) {
            if (!keep[a]) continue;
            for (size_t b = a + 1; b < cands.size(); ++b) {
                if (keep[b] && cands[b].l == cands[a].l) {
                    if (cands[b].coprime) std::swap(cands[a], cands[b]);
                    keep[b] = false;
                }
            }
        }
        for (size_t a = 0; a < cands.size(); ++a) {
            if (!keep[a] || cands[a].coprime) continue;  // product criterion
            pairs.push_back(
                {cands[a].i, t, cands[a].l, gbdetail::weighted_degree(cands[a].l, ring->ord.weights), seq++});
        }

        for (int i = 0; i < t; ++i)
            if (!redundant[i] && divides(lth, G[i].leading_monomial())) redundant[i] = true;

        redundant.push_back(false);
        red.push_back(gbdetail::make_reducer(h));
        G.push_back(std::move(h));
    };

    for (const auto& f : input) {
        if (f.is_zero()) continue;
        Polynomial<K> g = f;
        primitive_part(g);
        add_element(std::move(g));
    }

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < pairs.size(); ++i) {
            const auto& a = pairs[i];
            const auto& b = pairs[best];
            if (a.wdeg < b.wdeg || (a.wdeg == b.wdeg && a.seq < b.seq)) best = i;
        }
        SPair p = pairs[best];
        pairs.erase(pairs.begin() + best);

        const Polynomial<K>&f = G[p.i], &g = G[p.j];
        // cross-scaled S-polynomial avoids divisions
        Polynomial<K> s = mul_term(f, quotient(p.lcm, f.leading_monomial()), g.leading_coefficient()) -
                          mul_term(g, quotient(p.lcm, g.leading_monomial()), f.leading_coefficient());
        if (s.is_zero()) continue;
        Polynomial<K> h = gbdetail::normal_form_list(s, red, ring);
        if (h.is_zero()) continue;
        primitive_part(h);
        add_element(std::move(h));
    }

    // minimalize
    std::vector<Polynomial<K>> mins;
    for (size_t i = 0; i < G.size(); ++i)
        if (!redundant[i]) mins.push_back(G[i]);
    // tail-reduce each against the others to get the reduced basis
    std::vector<Reducer<K>> minred;
    minred.reserve(mins.size());
    for (const auto& g : mins) minred.push_back(gbdetail::make_reducer(g));
    std::vector<Polynomial<K>> out;
    for (size_t i = 0; i < mins.size(); ++i) {
        Polynomial<K> r = gbdetail::normal_form_list(mins[i], minred, ring, static_cast<int>(i));
        if (!r.is_zero()) out.push_back(monic(r));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        return ring->ord.less(a.leading_monomial(), b.leading_monomial());
    });
    return out;
}

template <class K>
const std::vector<Polynomial<K>>& groebner(const Ideal<K>& I) {
    if (!I.gb) I.gb = std::make_shared<std::vector<Polynomial<K>>>(buchberger(I.ring, I.gens));
    return *I.gb;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const Ideal<K>& I) {
    const auto& gb = groebner(I);
    std::vector<gbdetail::Reducer<K>> red;
    red.reserve(gb.size());
    for (const auto& g : gb) red.push_back(gbdetail::make_reducer(g));
    return gbdetail::normal_form_list(f, red, I.ring);
}

template <class K>
bool ideal_contains(const Ideal<K>& I, const Polynomial<K>& f) {
    return normal_form(f, I).is_zero();
}

template <class K>
bool is_one_ideal(const Ideal<K>& I) {
    const auto& gb = groebner(I);
    return gb.size() == 1 && gb[0].degree() == 0;
}

template <class K>
bool same_ideal(const Ideal<K>& I, const Ideal<K>& J) {
    return groebner(I) == groebner(J);
}

template <class K>
bool is_homogeneous_ideal(const Ideal<K>& I) {
    for (const auto& g : I.gens)
        if (!is_homogeneous(g)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Ring/order changes
// ---------------------------------------------------------------------------

// same variables, different order
template <class K>
RingPtr<K> with_order(const RingPtr<K>& r, MonomialOrder ord) {
    return PolynomialRing<K>::make(r->vars, r->one, std::move(ord));
}

template <class K>
Polynomial<K> reorder(const Polynomial<K>& f, const RingPtr<K>& nr) {
    std::vector<Term<K>> ts = f.ts;
    Polynomial<K> p(nr);
    p.ts = std::move(ts);
    std::sort(p.ts.begin(), p.ts.end(),
              [&](const Term<K>& a, const Term<K>& b) { return nr->ord.greater(a.m, b.m); });
    return p;
}

// GB of I under an arbitrary order on the same variables, results reordered
// back into I's ring.
template <class K>
std::vector<Polynomial<K>> groebner_with_order(const Ideal<K>& I, const MonomialOrder& ord) {
    RingPtr<K> r2 = with_order(I.ring, ord);
    std::vector<Polynomial<K>> gens2;
    gens2.reserve(I.gens.size());
    for (const auto& g : I.gens) gens2.push_back(reorder(g, r2));
    return buchberger(r2, gens2);
}

// ---------------------------------------------------------------------------
// Elimination, intersection, quotient, saturation
// ---------------------------------------------------------------------------

// Generators of I ∩ k[vars \ drop], computed with the two-block order
// [drop: grevlex][rest: grevlex], returned inside the subring on the kept
// variables (grevlex).
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<int>& drop) {
    std::vector<int> kept;
    std::vector<bool> dropped(I.ring->nvars(), false);
    for (int v : drop) dropped[v] = true;
    for (int v = 0; v < I.ring->nvars(); ++v)
        if (!dropped[v]) kept.push_back(v);

    auto gbe = groebner_with_order(I, MonomialOrder::elimination(drop, kept));

    std::vector<std::string> subvars;
    for (int v : kept) subvars.push_back(I.ring->vars[v]);
    RingPtr<K> sub = PolynomialRing<K>::make(subvars, I.ring->one);
    std::vector<int> vm(I.ring->nvars(), -1);
    for (size_t i = 0; i < kept.size(); ++i) vm[kept[i]] = static_cast<int>(i);

    std::vector<Polynomial<K>> out;
    for (const auto& g : gbe) {
        bool free = true;
        for (int v : drop)
            if (involves_var(g, v)) {
                free = false;
                break;
            }
        if (free) out.push_back(map_to_ring(g, sub, vm));
    }
    return make_ideal(sub, std::move(out));
}

// Variant that keeps the parent ring.
template <class K>
Ideal<K> eliminate_keep_ring(const Ideal<K>& I, const std::vector<int>& drop) {
    std::vector<int> kept;
    std::vector<bool> dropped(I.ring->nvars(), false);
    for (int v : drop) dropped[v] = true;
    for (int v = 0; v < I.ring->nvars(); ++v)
        if (!dropped[v]) kept.push_back(v);
    auto gbe = groebner_with_order(I, MonomialOrder::elimination(drop, kept));
    std::vector<Polynomial<K>> out;
    for (const auto& g : gbe) {
        bool free = true;
        for (int v : drop)
            if (involves_var(g, v)) {
                free = false;
                break;
            }
        if (free) out.push_back(reorder(g, I.ring));
    }
    return make_ideal(I.ring, std::move(out));
}

// I ∩ J via the auxiliary-variable construction: eliminate s from s*I + (1-s)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
    check_same_ring(I.ring, J.ring);
    const RingPtr<K>& r = I.ring;
    std::vector<std::string> vars2 = r->vars;
    vars2.insert(vars2.begin(), "@s");
    std::vector<int> elimv{0}, keepv;
    for (int i = 1; i <= r->nvars(); ++i) keepv.push_back(i);
    RingPtr<K> r2 = PolynomialRing<K>::make(vars2, r->one, MonomialOrder::elimination(elimv, keepv));
    std::vector<int> up(r->nvars());
    for (int i = 0; i < r->nvars(); ++i) up[i] = i + 1;

    Polynomial<K> s = poly_var(r2, 0);
    Polynomial<K> one_minus_s = poly_int(r2, 1) - s;
    std::vector<Polynomial<K>> gens2;
    for (const auto& f : I.gens) gens2.push_back(s * map_to_ring(f, r2, up));
    for (const auto& g : J.gens) gens2.push_back(one_minus_s * map_to_ring(g, r2, up));

    auto gb2 = buchberger(r2, gens2);
    std::vector<int> down(r2->nvars(), -1);
    for (int i = 0; i < r->nvars(); ++i) down[i + 1] = i;
    std::vector<Polynomial<K>> out;
    for (const auto& g : gb2)
        if (!involves_var(g, 0)) out.push_back(map_to_ring(g, r, down));
    return make_ideal(r, std::move(out));
}

// I : (g) = (I ∩ (g)) divided termwise by g.
template <class K>
Ideal<K> quotient_by_element(const Ideal<K>& I, const Polynomial<K>& g) {
    if (g.is_zero()) math_error("ExactDivisionFailure", "colon by zero");
    Ideal<K> gi = make_ideal(I.ring, {g});
    Ideal<K> meet = intersect(I, gi);
    std::vector<Polynomial<K>> out;
    for (const auto& f : meet.gens) out.push_back(divide_exact(f, g));
    return make_ideal(I.ring, std::move(out));
}

// I : J = ∩_g (I : (g)) over the generators of J.
template <class K>
Ideal<K> quotient(const Ideal<K>& I, const Ideal<K>& J) {
    check_same_ring(I.ring, J.ring);
    std::optional<Ideal<K>> acc;
    for (const auto& g : J.gens) {
        if (g.is_zero()) continue;
        Ideal<K> q = quotient_by_element(I, g);
        if (!acc)
            acc = std::move(q);
        else
            acc = intersect(*acc, q);
    }
    if (!acc) math_error("ExactDivisionFailure", "colon by the zero ideal");
    return *acc;
}

// I : J^inf by iterating quotient until the reduced GB stabilizes.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Ideal<K>& J) {
    Ideal<K> cur = I;
    while (true) {
        Ideal<K> nxt = quotient(cur, J);
        if (same_ideal(nxt, cur)) return cur;
        cur = std::move(nxt);
    }
}

// Fast path: saturation by a single ring variable for a homogeneous ideal,
// via grevlex with that variable last followed by division by its content.
// One GB, and the divided elements are again a basis of I : v^inf.
template <class K>
Ideal<K> saturate_variable(const Ideal<K>& I, int v) {
    if (!is_homogeneous_ideal(I)) {
        Ideal<K> J = make_ideal(I.ring, {poly_var(I.ring, v)});
        return saturate(I, J);
    }
    std::vector<int> priority;
    for (int i = 0; i < I.ring->nvars(); ++i)
        if (i != v) priority.push_back(i);
    priority.push_back(v);
    auto gb = groebner_with_order(I, MonomialOrder::grevlex_of(priority));
    std::vector<Polynomial<K>> out;
    for (auto& g : gb) {
        int k = 255;
        for (const auto& t : g.ts) k = std::min<int>(k, t.m.e[v]);
        if (k == 0) {
            out.push_back(reorder(g, I.ring));
            continue;
        }
        Polynomial<K> h = g;
        for (auto& t : h.ts) {
            t.m.e[v] = static_cast<uint8_t>(t.m.e[v] - k);
            t.m.deg = static_cast<uint16_t>(t.m.deg - k);
        }
        out.push_back(reorder(h, I.ring));
    }
    return make_ideal(I.ring, std::move(out));
}

// Fast path: I : g^inf for homogeneous I and homogeneous g, one weighted GB.
// Adjoin w with weight deg(g) and the relation g - w, saturate at w, then
// substitute w := g back.
template <class K>
Ideal<K> saturate_element(const Ideal<K>& I, const Polynomial<K>& g) {
    if (g.is_zero()) math_error("ExactDivisionFailure", "saturation by zero");
    if (!is_homogeneous_ideal(I) || !is_homogeneous(g) || g.degree() == 0) {
        // general fallback
        Ideal<K> cur = I;
        while (true) {
            Ideal<K> nxt = quotient_by_element(cur, g);
            if (same_ideal(nxt, cur)) return cur;
            cur = std::move(nxt);
        }
    }
    const RingPtr<K>& r = I.ring;
    const int n = r->nvars();
    std::vector<std::string> vars2 = r->vars;
    vars2.push_back("@w");
    std::vector<int> priority(n + 1);
    for (int i = 0; i <= n; ++i) priority[i] = i;
    MonomialOrder ord = MonomialOrder::grevlex_of(priority);
    ord.weights.assign(n + 1, 1);
    ord.weights[n] = g.degree();
    RingPtr<K> r2 = PolynomialRing<K>::make(vars2, r->one, ord);

    std::vector<int> up(n);
    for (int i = 0; i < n; ++i) up[i] = i;
    std::vector<Polynomial<K>> gens2;
    for (const auto& f : I.gens) gens2.push_back(map_to_ring(f, r2, up));
    gens2.push_back(map_to_ring(g, r2, up) - poly_var(r2, n));

    auto gb = buchberger(r2, gens2);

    // divide by the w-content, then substitute w := g
    std::vector<Polynomial<K>> images;
    for (int i = 0; i < n; ++i) images.push_back(poly_var(r, i));
    images.push_back(g);
    std::vector<Polynomial<K>> out;
    for (auto& h : gb) {
        int k = 255;
        for (const auto& t : h.ts) k = std::min<int>(k, t.m.e[n]);
        Polynomial<K> hh = h;
        if (k > 0) {
            for (auto& t : hh.ts) {
                t.m.e[n] = static_cast<uint8_t>(t.m.e[n] - k);
                t.m.deg = static_cast<uint16_t>(t.m.deg - k);
            }
        }
        Polynomial<K> back = substitute(hh, images);
        if (!back.is_zero()) {
            primitive_part(back);
            out.push_back(std::move(back));
        }
    }
    // light dedup: drop exact duplicates
    std::sort(out.begin(), out.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        return r->ord.less(a.leading_monomial(), b.leading_monomial());
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return make_ideal(r, std::move(out));
}

// ---------------------------------------------------------------------------
// Dimension and degree via the Hilbert series of the leading-term ideal
// ---------------------------------------------------------------------------

namespace gbdetail {

using HPoly = std::vector<long long>;  // dense in T

inline HPoly hp_one() { return {1}; }

inline HPoly hp_sub_shift(const HPoly& a, const HPoly& b, int shift) {
    HPoly r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, 0);
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

inline Monomial mono_colon(const Monomial& g, const Monomial& m) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = g.e[i] > m.e[i] ? g.e[i] - m.e[i] : 0;
        r.e[i] = static_cast<uint8_t>(e);
        d += e;
    }
    r.deg = static_cast<uint16_t>(d);
    return r;
}

inline void minimalize_monomials(std::vector<Monomial>& v) {
    std::sort(v.begin(), v.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<Monomial> out;
    for (size_t i = 0; i < v.size(); ++i) {
        bool redundant = false;
        for (const auto& kept : out)
            if (divides(kept, v[i])) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(v[i]);
    }
    v = std::move(out);
}

// numerator of the Hilbert series of R/(monomial ideal) over (1-T)^n
inline HPoly hilbert_numerator(std::vector<Monomial> gens) {
    minimalize_monomials(gens);
    if (gens.empty()) return hp_one();
    if (gens.size() == 1 && gens[0].deg == 0) return {};
    // pivot recursion: split on the last generator
    Monomial m = gens.back();
    gens.pop_back();
    HPoly base = hilbert_numerator(gens);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) colon.push_back(mono_colon(g, m));
    HPoly quot = hilbert_numerator(std::move(colon));
    return hp_sub_shift(base, quot, m.deg);
}

}  // namespace gbdetail

struct DimensionDegree {
    int projective_dimension;  // -1 for the unit ideal
    long long degree;
    int codim;  // nvars - affine dimension of the cone
};

template <class K>
DimensionDegree dimension_and_degree(const Ideal<K>& I) {
    const auto& gb = groebner(I);
    const int n = I.ring->nvars();
    if (!gb.empty() && gb[0].degree() == 0) return {-1, 0, n};

    std::vector<Monomial> lts;
    lts.reserve(gb.size());
    for (const auto& g : gb) lts.push_back(g.leading_monomial());
    gbdetail::HPoly num = gbdetail::hilbert_numerator(lts);

    // divide by (1 - T) as many times as possible
    int cancelled = 0;
    while (!num.empty()) {
        long long s = 0;
        for (long long c : num) s += c;
        if (s != 0) break;
        // num / (1 - T): synthetic division
        gbdetail::HPoly q(num.size() - 1, 0);
        long long carry = 0;
        for (size_t i = 0; i + 1 < num.size(); ++i) {
            carry += num[i];
            q[i] = carry;
        }
        num = std::move(q);
        ++cancelled;
    }
    long long deg = 0;
    for (long long c : num) deg += c;
    int affine_dim = n - cancelled;
    return {affine_dim - 1, deg, cancelled};
}

// ---------------------------------------------------------------------------
// Linear algebra on graded pieces (shared by the quartic pipelines)
// ---------------------------------------------------------------------------

template <class K>
struct MonomialIndex {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, int, MonomialHash> pos;

    explicit MonomialIndex(std::vector<Monomial> b) : basis(std::move(b)) {
        for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);
    }
    int size() const { return static_cast<int>(basis.size()); }
};

template <class K>
std::vector<K> poly_to_vec(const Polynomial<K>& f, const MonomialIndex<K>& ix, const K& ctx) {
    std::vector<K> v(ix.basis.size(), from_int(0, ctx));
    for (const auto& t : f.ts) {
        auto it = ix.pos.find(t.m);
        if (it == ix.pos.end()) math_error("MonomialNotInBasis", "vectorizing outside basis");
        v[it->second] = t.c;
    }
    return v;
}

// span of the degree-d piece of the ideal generated by homogeneous gens
template <class K>
std::vector<Polynomial<K>> graded_piece_gens(const RingPtr<K>& r, const std::vector<Polynomial<K>>& gens,
                                             int d) {
    std::vector<Polynomial<K>> out;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int e = g.degree();
        if (e > d) continue;
        for (const auto& m : monomial_basis(r, d - e)) out.push_back(mul_term(g, m, r->one));
    }
    return out;
}

}  // namespace scorza

#endif
