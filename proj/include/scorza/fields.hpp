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

#ifndef SCORZA_FIELDS_HPP
#define SCORZA_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "scorza/common.hpp"

namespace scorza {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, positive denominator

// mpq_class(n, d) does not canonicalize on its own; route fraction literals
// through here so that comparisons stay valid.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}
inline Rational make_rational(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }

inline Rational field_inv(const Rational& a) {
    if (is_zero(a)) math_error("ZeroInversion", "inverse of 0 in QQ");
    return Rational(1) / a;
}

inline std::string to_string(const Rational& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

// ---------------------------------------------------------------------------
// Prime fields GF(p), p a machine-word prime.
// ---------------------------------------------------------------------------

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit operands.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Residue mod p. A default-constructed value (p == 0) is a context-free zero
// that adopts the modulus of the other operand.
struct Fp {
    uint64_t v = 0;
    uint64_t p = 0;

    Fp() = default;
    Fp(uint64_t value, uint64_t prime) : v(value % prime), p(prime) {}

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p == 0 || b.p == 0) return a.v == 0 && b.v == 0;
        return a.p == b.p && a.v == b.v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline uint64_t fp_ctx(const Fp& a, const Fp& b) {
    if (a.p == 0) return b.p;
    if (b.p != 0 && a.p != b.p) math_error("FieldMismatch", "GF(p) moduli differ");
    return a.p;
}

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline bool is_one(const Fp& a) { return a.v == 1; }

inline Fp operator+(const Fp& a, const Fp& b) {
    uint64_t p = fp_ctx(a, b);
    if (p == 0) return Fp{};
    uint64_t s = a.v + b.v;
    if (s >= p) s -= p;
    return Fp(s, p);
}
inline Fp operator-(const Fp& a) {
    if (a.p == 0 || a.v == 0) return a;
    return Fp(a.p - a.v, a.p);
}
inline Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
inline Fp operator*(const Fp& a, const Fp& b) {
    uint64_t p = fp_ctx(a, b);
    if (p == 0) return Fp{};
    return Fp(mulmod_u64(a.v, b.v, p), p);
}

inline Fp field_inv(const Fp& a) {
    if (a.v == 0) math_error("ZeroInversion", "inverse of 0 in GF(p)");
    // extended Euclid on (a.v, p)
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(a.p), newr = static_cast<int64_t>(a.v);
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<int64_t>(a.p);
    return Fp(static_cast<uint64_t>(t), a.p);
}

inline std::string to_string(const Fp& a) { return std::to_string(a.v); }

// ---------------------------------------------------------------------------
// Number fields QQ[t]/(m(t)), m monic. Irreducibility of m is not verified up
// front; a reducible modulus surfaces as ReducibleModulus on inversion.
// ---------------------------------------------------------------------------

struct NumberFieldCtx {
    // minpoly x^deg + sum_{i<deg} min[i] x^i
    std::vector<Rational> min;
    std::string gen = "t";

    int deg() const { return static_cast<int>(min.size()); }
};

struct NF {
    std::shared_ptr<const NumberFieldCtx> ctx;  // null for context-free zero
    std::vector<Rational> c;                    // size ctx->deg(), basis 1, t, ..., t^(deg-1)

    NF() = default;
    explicit NF(std::shared_ptr<const NumberFieldCtx> k) : ctx(std::move(k)) {
        c.assign(ctx->deg(), Rational(0));
    }

    friend bool operator==(const NF& a, const NF& b) {
        auto zero = [](const NF& x) {
            for (const auto& q : x.c)
                if (sgn(q) != 0) return false;
            return true;
        };
        if (!a.ctx || !b.ctx) return zero(a) && zero(b);
        if (a.ctx != b.ctx && a.ctx->min != b.ctx->min) return false;
        return a.c == b.c;
    }
    friend bool operator!=(const NF& a, const NF& b) { return !(a == b); }
};

inline std::shared_ptr<const NumberFieldCtx> nf_ctx(const NF& a, const NF& b) {
    if (!a.ctx) return b.ctx;
    if (b.ctx && a.ctx != b.ctx && a.ctx->min != b.ctx->min)
        math_error("FieldMismatch", "number field moduli differ");
    return a.ctx;
}

inline bool is_zero(const NF& a) {
    for (const auto& q : a.c)
        if (sgn(q) != 0) return false;
    return true;
}
inline bool is_one(const NF& a) {
    if (a.c.empty() || a.c[0] != 1) return false;
    for (size_t i = 1; i < a.c.size(); ++i)
        if (sgn(a.c[i]) != 0) return false;
    return true;
}

// Canonical representative of sum coeffs[i] t^i, degree reduced below deg(m).
inline std::vector<Rational> nf_reduce(std::vector<Rational> w, const NumberFieldCtx& k) {
    const int n = k.deg();
    for (int d = static_cast<int>(w.size()) - 1; d >= n; --d) {
        Rational lead = w[d];
        if (sgn(lead) == 0) continue;
        w[d] = 0;
        for (int i = 0; i < n; ++i) w[d - n + i] -= lead * k.min[i];
    }
    w.resize(n, Rational(0));
    return w;
}

inline NF nf_from_coeffs(std::shared_ptr<const NumberFieldCtx> k, std::vector<Rational> w) {
    NF r(k);
    r.c = nf_reduce(std::move(w), *k);
    return r;
}

inline NF operator+(const NF& a, const NF& b) {
    auto k = nf_ctx(a, b);
    if (!k) return NF{};
    NF r(k);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}
inline NF operator-(const NF& a) {
    NF r = a;
    for (auto& q : r.c) q = -q;
    return r;
}
inline NF operator-(const NF& a, const NF& b) { return a + (-b); }

inline NF operator*(const NF& a, const NF& b) {
    auto k = nf_ctx(a, b);
    if (!k) return NF{};
    if (a.c.empty() || b.c.empty()) return NF(k);
    std::vector<Rational> w(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) w[i + j] += a.c[i] * b.c[j];
    }
    return nf_from_coeffs(k, std::move(w));
}

namespace detail {

// dense univariate helpers over QQ for the extended Euclid below
inline void upoly_trim(std::vector<Rational>& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline std::vector<Rational> upoly_sub_scaled(std::vector<Rational> a, const std::vector<Rational>& b,
                                              const Rational& s, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
    upoly_trim(a);
    return a;
}

}  // namespace detail

inline NF field_inv(const NF& a) {
    if (is_zero(a)) math_error("ZeroInversion", "inverse of 0 in number field");
    const auto& k = *a.ctx;
    // extended Euclid between repr(a) and the minimal polynomial
    std::vector<Rational> r0 = k.min;
    r0.push_back(Rational(1));  // monic of degree n
    std::vector<Rational> r1 = a.c;
    detail::upoly_trim(r1);
    std::vector<Rational> s0{}, s1{Rational(1)};  // coefficients of a in r_i
    while (true) {
        if (r1.empty()) math_error("ReducibleModulus", "modulus shares a factor with element");
        if (r1.size() == 1) break;  // nonzero constant gcd
        while (r0.size() >= r1.size()) {
            int shift = static_cast<int>(r0.size() - r1.size());
            Rational q = r0.back() / r1.back();
            r0 = detail::upoly_sub_scaled(std::move(r0), r1, q, shift);
            std::vector<Rational> qs(shift + 1, Rational(0));
            qs[shift] = q;
            // s0 -= q x^shift * s1
            if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, Rational(0));
            for (size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= q * s1[i];
            detail::upoly_trim(s0);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    Rational inv_g = Rational(1) / r1[0];
    for (auto& q : s1) q *= inv_g;
    return nf_from_coeffs(a.ctx, std::move(s1));
}

inline std::string to_string(const NF& a) {
    if (is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        Rational q = a.c[i];
        if (first) {
            if (sgn(q) < 0) {
                os << "-";
                q = -q;
            }
        } else {
            os << (sgn(q) < 0 ? "-" : "+");
            if (sgn(q) < 0) q = -q;
        }
        first = false;
        const std::string& t = a.ctx->gen;
        if (i == 0) {
            os << q;
        } else {
            if (q != 1) os << q << "*";
            os << t;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Embeddings of small scalars into a coefficient field, guided by a context
// sample (any element of the target field, zero included only for QQ).
// ---------------------------------------------------------------------------

inline Rational from_rational(const Rational& q, const Rational&) { return q; }

inline Fp from_rational(const Rational& q, const Fp& ctx) {
    if (ctx.p == 0) math_error("FieldMismatch", "context-free GF(p) sample");
    Integer num = q.get_num(), den = q.get_den();
    Integer p(static_cast<unsigned long>(ctx.p));
    Integer dm = den % p;
    if (sgn(dm) == 0) math_error("BadPrime", "denominator divisible by p");
    Integer nm = num % p;
    if (sgn(nm) < 0) nm += p;
    Fp n(nm.get_ui(), ctx.p), d(dm.get_ui(), ctx.p);
    return n * field_inv(d);
}

inline NF from_rational(const Rational& q, const NF& ctx) {
    if (!ctx.ctx) math_error("FieldMismatch", "context-free number field sample");
    NF r(ctx.ctx);
    r.c[0] = q;
    return r;
}

template <class K>
K from_int(long n, const K& ctx) {
    return from_rational(Rational(n), ctx);
}

template <class K>
K one_like(const K& ctx) {
    return from_int<K>(1, ctx);
}

// ---------------------------------------------------------------------------
// Runtime field descriptor and element (used by the text interfaces; the
// algorithm kernels are templated on the concrete field type).
// ---------------------------------------------------------------------------

struct FieldDescriptor {
    enum class Kind { Rationals, PrimeField, NumberField };
    Kind kind = Kind::Rationals;
    uint64_t p = 0;
    std::shared_ptr<const NumberFieldCtx> nf;

    static FieldDescriptor rationals() { return FieldDescriptor{}; }

    static FieldDescriptor prime_field(uint64_t p) {
        if (!is_prime_u64(p)) usage_error("FieldMismatch", "GF modulus " + std::to_string(p) + " is not prime");
        FieldDescriptor d;
        d.kind = Kind::PrimeField;
        d.p = p;
        return d;
    }

    // minpoly coefficients c0..cn with cn the leading coefficient; must be monic
    static FieldDescriptor number_field(std::vector<Rational> minpoly, std::string gen = "t") {
        if (minpoly.size() < 2 || minpoly.back() != 1)
            usage_error("FieldMismatch", "number field modulus must be monic of degree >= 1");
        auto ctx = std::make_shared<NumberFieldCtx>();
        minpoly.pop_back();
        ctx->min = std::move(minpoly);
        ctx->gen = std::move(gen);
        FieldDescriptor d;
        d.kind = Kind::NumberField;
        d.nf = std::move(ctx);
        return d;
    }

    bool same_as(const FieldDescriptor& o) const {
        if (kind != o.kind) return false;
        if (kind == Kind::PrimeField) return p == o.p;
        if (kind == Kind::NumberField) return nf == o.nf || nf->min == o.nf->min;
        return true;
    }

    std::string to_text() const {
        switch (kind) {
            case Kind::Rationals:
                return "QQ";
            case Kind::PrimeField:
                return "GF " + std::to_string(p);
            case Kind::NumberField: {
                std::ostringstream os;
                os << "QQ[" << nf->gen << "]/(";
                NF t(nf);
                // print the modulus as a polynomial in the generator
                bool first = true;
                int n = nf->deg();
                os << nf->gen << "^" << n;
                for (int i = n - 1; i >= 0; --i) {
                    Rational c = nf->min[i];
                    if (sgn(c) == 0) continue;
                    os << (sgn(c) < 0 ? "-" : "+");
                    Rational a = abs(c);
                    if (i == 0)
                        os << a;
                    else {
                        if (a != 1) os << a << "*";
                        os << nf->gen;
                        if (i > 1) os << "^" << i;
                    }
                    first = false;
                }
                (void)first;
                os << ")";
                return os.str();
            }
        }
        return "";
    }
};

using FieldElement = std::variant<Rational, Fp, NF>;

inline FieldElement fe_zero(const FieldDescriptor& d) {
    switch (d.kind) {
        case FieldDescriptor::Kind::Rationals:
            return Rational(0);
        case FieldDescriptor::Kind::PrimeField:
            return Fp(0, d.p);
        case FieldDescriptor::Kind::NumberField:
            return NF(d.nf);
    }
    return Rational(0);
}

inline FieldElement fe_one(const FieldDescriptor& d) {
    switch (d.kind) {
        case FieldDescriptor::Kind::Rationals:
            return Rational(1);
        case FieldDescriptor::Kind::PrimeField:
            return Fp(1, d.p);
        case FieldDescriptor::Kind::NumberField: {
            NF r(d.nf);
            r.c[0] = 1;
            return r;
        }
    }
    return Rational(1);
}

inline bool fe_is_zero(const FieldElement& a) {
    return std::visit([](const auto& x) { return is_zero(x); }, a);
}

template <class Op>
FieldElement fe_binop(const FieldElement& a, const FieldElement& b, Op op) {
    if (a.index() != b.index()) math_error("FieldMismatch", "elements of different fields");
    return std::visit(
        [&](const auto& x) -> FieldElement {
            using T = std::decay_t<decltype(x)>;
            return op(x, std::get<T>(b));
        },
        a);
}

inline FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
    return fe_binop(a, b, [](const auto& x, const auto& y) { return x + y; });
}
inline FieldElement fe_sub(const FieldElement& a, const FieldElement& b) {
    return fe_binop(a, b, [](const auto& x, const auto& y) { return x - y; });
}
inline FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
    return fe_binop(a, b, [](const auto& x, const auto& y) { return x * y; });
}

// invert(a): pre a != 0; ZeroInversion / ReducibleModulus propagate from the reprs.
inline FieldElement invert(const FieldElement& a) {
    return std::visit([](const auto& x) -> FieldElement { return field_inv(x); }, a);
}

// reduce_mod_minpoly: canonical representative of sum coeffs[i] t^i.
inline FieldElement reduce_mod_minpoly(const FieldDescriptor& d, std::vector<Rational> coeffs) {
    if (d.kind != FieldDescriptor::Kind::NumberField)
        usage_error("FieldMismatch", "reduce_mod_minpoly needs a number field");
    return nf_from_coeffs(d.nf, std::move(coeffs));
}

inline std::string fe_to_string(const FieldElement& a) {
    return std::visit([](const auto& x) { return to_string(x); }, a);
}

}  // namespace scorza

#endif
