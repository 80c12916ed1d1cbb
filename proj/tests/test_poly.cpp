#include "doctest.h"

#include <random>

#include "scorza/matrix.hpp"
#include "scorza/polynomial.hpp"

using namespace scorza;

namespace {

using PQ = Polynomial<Rational>;

RingPtr<Rational> xyz() { return PolynomialRing<Rational>::make({"x", "y", "z"}, Rational(1)); }

PQ rand_poly(const RingPtr<Rational>& r, int deg, int terms, std::mt19937_64& rng) {
    std::vector<Term<Rational>> ts;
    std::uniform_int_distribution<int> cd(-9, 9);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int rem = deg;
        for (int i = 0; i < r->nvars(); ++i) {
            int e = static_cast<int>(rng() % (rem + 1));
            m.e[i] = static_cast<uint8_t>(e);
            rem -= e;
        }
        m.deg = static_cast<uint16_t>(deg - rem);
        int c = cd(rng);
        if (c == 0) c = 1;
        ts.push_back({m, Rational(c)});
    }
    return poly_from_terms(r, std::move(ts));
}

PQ rand_homog(const RingPtr<Rational>& r, int deg, std::mt19937_64& rng) {
    auto basis = monomial_basis(r, deg);
    std::vector<Term<Rational>> ts;
    std::uniform_int_distribution<int> cd(-9, 9);
    for (const auto& m : basis) {
        int c = cd(rng);
        if (c != 0) ts.push_back({m, Rational(c)});
    }
    return poly_from_terms(r, std::move(ts));
}

}  // namespace

TEST_CASE("monomial order axioms on random triples") {
    std::mt19937_64 rng(3);
    auto check_order = [&](const MonomialOrder& ord, int nvars) {
        for (int it = 0; it < 300; ++it) {
            Monomial a, b, c;
            for (int i = 0; i < nvars; ++i) {
                a.e[i] = rng() % 5;
                b.e[i] = rng() % 5;
                c.e[i] = rng() % 5;
                a.deg += a.e[i];
                b.deg += b.e[i];
                c.deg += c.e[i];
            }
            // exactly one of <, =, >
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            if (a == b) CHECK(ab == 0);
            // multiplicative
            if (ab < 0) CHECK(ord.compare(a * c, b * c) < 0);
            // 1 is minimal
            Monomial one;
            if (!(a == one)) CHECK(ord.compare(one, a) < 0);
            // transitivity spot check
            if (ab < 0 && ord.compare(b, c) < 0) CHECK(ord.compare(a, c) < 0);
        }
    };
    check_order(MonomialOrder::grevlex(4), 4);
    check_order(MonomialOrder::elimination({0, 1}, {2, 3}), 4);
    MonomialOrder mixed;
    mixed.blocks.push_back({{1, 3}, OrderBlock::Kind::Lex});
    mixed.blocks.push_back({{0, 2}, OrderBlock::Kind::GRevLex});
    check_order(mixed, 4);
}

TEST_CASE("grevlex ordering of degree-3 monomials in x,y,z") {
    auto r = xyz();
    auto b = monomial_basis(r, 3);
    REQUIRE(b.size() == 10);
    // descending: x^3 > x^2y > xy^2 > y^3 > x^2z > xyz > y^2z > xz^2 > yz^2 > z^3
    auto mono = [&](int a, int bb, int c) {
        Monomial m;
        m.e[0] = a;
        m.e[1] = bb;
        m.e[2] = c;
        m.deg = static_cast<uint16_t>(a + bb + c);
        return m;
    };
    CHECK(b[0] == mono(3, 0, 0));
    CHECK(b[1] == mono(2, 1, 0));
    CHECK(b[2] == mono(1, 2, 0));
    CHECK(b[3] == mono(0, 3, 0));
    CHECK(b[4] == mono(2, 0, 1));
    CHECK(b[9] == mono(0, 0, 3));
}

TEST_CASE("ring axioms on random polynomial triples") {
    auto r = xyz();
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        PQ a = rand_poly(r, 4, 5, rng), b = rand_poly(r, 4, 5, rng), c = rand_poly(r, 4, 5, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("diff_contract basics") {
    auto r = xyz();
    PQ x = poly_var(r, 0), y = poly_var(r, 1);
    // (d0, x0^2 x1) -> 2 x0 x1
    PQ f = x * x * y;
    PQ d0 = x;  // operator written in the same positional variables
    CHECK(diff_contract(d0, f) == scale(x * y, Rational(2)));
    // (d0^2, x1^3) -> 0
    CHECK(diff_contract(x * x, y * y * y).is_zero());
}

TEST_CASE("iterated polar gives d! f(a)") {
    auto r = xyz();
    std::mt19937_64 rng(5);
    PQ f = rand_homog(r, 3, rng);
    // P_a^3(f) = 3! f(a) with a = (1,1,1)
    std::vector<Rational> a{Rational(1), Rational(1), Rational(1)};
    PQ p = f;
    for (int i = 0; i < 3; ++i) p = polar(a, p);
    REQUIRE(p.nterms() <= 1);
    Rational val = evaluate(f, a);
    CHECK(scalar_of(p, Rational(1)) == Rational(6) * val);
}

TEST_CASE("coordinate polar of Fermat quartic") {
    auto r = xyz();
    PQ f = poly_pow(poly_var(r, 0), 4) + poly_pow(poly_var(r, 1), 4) + poly_pow(poly_var(r, 2), 4);
    std::vector<Rational> a{Rational(0), Rational(0), Rational(1)};
    PQ p = polar(a, f);
    CHECK(p == scale(poly_pow(poly_var(r, 2), 3), Rational(4)));
}

TEST_CASE("polars commute") {
    auto r = xyz();
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        PQ f = rand_homog(r, 4, rng);
        std::vector<Rational> a{Rational((long)(rng() % 7) - 3), Rational((long)(rng() % 7) - 3), Rational(1)};
        std::vector<Rational> b{Rational(2), Rational((long)(rng() % 5) - 2), Rational((long)(rng() % 5))};
        CHECK(polar(a, polar(b, f)) == polar(b, polar(a, f)));
    }
}

TEST_CASE("polar kills summands not involving the point direction") {
    // the z-polar of a Waring sum whose first summands avoid z is a combination
    // of cubes of the remaining lines
    auto r = xyz();
    PQ x = poly_var(r, 0), y = poly_var(r, 1), z = poly_var(r, 2);
    PQ l4 = x + y + z;
    PQ l5 = x + scale(y, Rational(2)) + scale(z, Rational(3));
    PQ l6 = scale(x, Rational(-5)) + scale(y, Rational(7)) + scale(z, Rational(-11));
    PQ f = poly_pow(x, 4) + poly_pow(y, 4) + poly_pow(x + y, 4) + poly_pow(l4, 4) + poly_pow(l5, 4) + poly_pow(l6, 4);
    std::vector<Rational> q{Rational(0), Rational(0), Rational(1)};
    PQ p = polar(q, f);
    PQ expected = scale(poly_pow(l4, 3), Rational(4)) + scale(poly_pow(l5, 3), Rational(12)) +
                  scale(poly_pow(l6, 3), Rational(-44));
    CHECK(p == expected);
}

TEST_CASE("Leibniz and Euler identities") {
    auto r = xyz();
    std::mt19937_64 rng(31);
    for (int it = 0; it < 10; ++it) {
        PQ f = rand_poly(r, 3, 4, rng), g = rand_poly(r, 3, 4, rng);
        for (int i = 0; i < 3; ++i) CHECK(diff(f * g, i) == diff(f, i) * g + f * diff(g, i));
        PQ h = rand_homog(r, 4, rng);
        PQ euler(r);
        for (int i = 0; i < 3; ++i) euler = euler + poly_var(r, i) * diff(h, i);
        CHECK(euler == scale(h, Rational(4)));
    }
}

TEST_CASE("hessian of Fermat cubic factors as the coordinate triangle") {
    auto r = xyz();
    PQ f = poly_pow(poly_var(r, 0), 3) + poly_pow(poly_var(r, 1), 3) + poly_pow(poly_var(r, 2), 3);
    auto h = hessian_matrix(f);
    PQ d = determinant(h);
    PQ xyz_prod = poly_var(r, 0) * poly_var(r, 1) * poly_var(r, 2);
    CHECK(d == scale(xyz_prod, Rational(216)));

    PQ x2 = poly_pow(poly_var(r, 0), 2);
    auto h2 = hessian_matrix(x2);
    CHECK(h2.at(0, 0) == poly_int(r, 2));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i || j) CHECK(h2.at(i, j).is_zero());
}

TEST_CASE("hessian of cuspidal cubic contains the square of the cusp tangent cone") {
    auto r = xyz();
    PQ y = poly_var(r, 1), z = poly_var(r, 2), x = poly_var(r, 0);
    PQ f = y * y * z - x * x * x;
    PQ d = determinant(hessian_matrix(f));
    // splits as l1^2 l2 with l1^2 = y^2 the tangent cone at the cusp (0,0,1)
    PQ expected = scale(x * y * y, Rational(24));
    CHECK(d == expected);
}

TEST_CASE("substitute_linear") {
    auto r = xyz();
    PQ x = poly_var(r, 0), y = poly_var(r, 1), z = poly_var(r, 2);
    PQ f = poly_pow(x, 4) + poly_pow(y, 4) + poly_pow(z, 4);

    Mat<Rational> id = identity_mat(3, Rational(1));
    auto sub_lin = [&](const PQ& p, const Mat<Rational>& g) {
        std::vector<PQ> images;
        for (int i = 0; i < 3; ++i) {
            PQ li(r);
            for (int j = 0; j < 3; ++j) li = li + scale(poly_var(r, j), g.at(i, j));
            images.push_back(li);
        }
        return substitute(p, images);
    };
    CHECK(sub_lin(f, id) == f);

    Mat<Rational> perm(3, 3, Rational(0));
    perm.at(0, 1) = 1;
    perm.at(1, 2) = 1;
    perm.at(2, 0) = 1;
    CHECK(sub_lin(f, perm) == f);

    // composition law on random matrices
    std::mt19937_64 rng(47);
    PQ h = rand_homog(r, 3, rng);
    Mat<Rational> g1(3, 3, Rational(0)), g2(3, 3, Rational(0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            g1.at(i, j) = Rational((long)(rng() % 5) - 2);
            g2.at(i, j) = Rational((long)(rng() % 5) - 2);
        }
    CHECK(sub_lin(sub_lin(h, g1), g2) == sub_lin(h, mat_mul(g1, g2, Rational(0))));
}

TEST_CASE("Klein quartic invariance under the diagonal 7th-root action") {
    // over QQ[t]/(t^6+t^5+t^4+t^3+t^2+t+1), f(tx, t^2 y, t^4 z) = f for f the Klein quartic
    std::vector<Rational> mp(7, Rational(1));
    auto d = FieldDescriptor::number_field(mp);
    NF one(d.nf);
    one.c[0] = 1;
    auto r = PolynomialRing<NF>::make({"x", "y", "z"}, one);
    using PN = Polynomial<NF>;
    PN x = poly_var(r, 0), y = poly_var(r, 1), z = poly_var(r, 2);
    PN f = x * poly_pow(y, 3) + y * poly_pow(z, 3) + z * poly_pow(x, 3);
    auto tau = [&](int k) {
        std::vector<Rational> w(k + 1, Rational(0));
        w[k] = 1;
        return nf_from_coeffs(d.nf, w);
    };
    std::vector<PN> images{scale(x, tau(1)), scale(y, tau(2)), scale(z, tau(4))};
    CHECK(substitute(f, images) == f);
}

TEST_CASE("monomial basis sizes") {
    auto r = xyz();
    CHECK(monomial_basis(r, 1).size() == 3);
    CHECK(monomial_basis(r, 4).size() == 15);
    auto r4 = PolynomialRing<Rational>::make({"y0", "y1", "y2", "y3"}, Rational(1));
    CHECK(monomial_basis(r4, 2).size() == 10);
}

TEST_CASE("coefficients against basis round trip") {
    auto r = xyz();
    auto basis = monomial_basis(r, 4);
    PQ f = scale(poly_pow(poly_var(r, 0), 4), Rational(25)) -
           scale(poly_pow(poly_var(r, 0), 2) * poly_pow(poly_var(r, 1), 2), Rational(34));
    auto v = coefficients_against_basis(f, basis);
    int nonzero = 0;
    for (const auto& c : v)
        if (!is_zero(c)) ++nonzero;
    CHECK(nonzero == 2);
    CHECK(poly_from_coefficients(r, basis, v) == f);

    PQ zero(r);
    auto vz = coefficients_against_basis(zero, basis);
    for (const auto& c : vz) CHECK(is_zero(c));

    std::mt19937_64 rng(81);
    for (int i = 0; i < 10; ++i) {
        PQ g = rand_homog(r, 4, rng);
        CHECK(poly_from_coefficients(r, basis, coefficients_against_basis(g, basis)) == g);
    }

    PQ cubic = poly_pow(poly_var(r, 0), 3);
    CHECK_THROWS_AS(coefficients_against_basis(cubic, basis), Error);
}

TEST_CASE("exact division") {
    auto r = xyz();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        PQ f = rand_poly(r, 3, 4, rng), g = rand_poly(r, 2, 3, rng);
        if (g.is_zero()) continue;
        CHECK(divide_exact(f * g, g) == f);
    }
    PQ x = poly_var(r, 0), y = poly_var(r, 1);
    CHECK_THROWS_AS(divide_exact(x * x + y, x), Error);
}

TEST_CASE("geobucket matches direct summation") {
    auto r = xyz();
    std::mt19937_64 rng(97);
    for (int it = 0; it < 10; ++it) {
        Geobucket<Rational> gb(r);
        PQ direct(r);
        for (int i = 0; i < 25; ++i) {
            PQ p = rand_poly(r, 5, 6, rng);
            gb.add(std::vector<Term<Rational>>(p.ts));
            direct = direct + p;
        }
        std::vector<Term<Rational>> drained;
        Term<Rational> t;
        while (gb.pop_leading(t)) drained.push_back(t);
        PQ sum(r);
        sum.ts = drained;
        CHECK(sum == direct);
    }
}
