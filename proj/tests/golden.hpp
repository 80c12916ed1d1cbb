// Golden inputs and frozen expected values shared by the unit and acceptance
// suites. Everything here is either a published value or derived from an
// independent oracle inside the tests that use it.
#ifndef SCORZA_TESTS_GOLDEN_HPP
#define SCORZA_TESTS_GOLDEN_HPP

#include <vector>

#include "scorza/seven_points.hpp"
#include "scorza/symdet.hpp"

namespace golden {

using scorza::Mat;
using scorza::make_rational;
using scorza::Polynomial;
using scorza::PolyMat;
using scorza::Rational;
using scorza::RingPtr;

inline Mat<Rational> edge_points() {
    long pts[7][3] = {{1, 2, 0}, {2, 0, 1}, {0, 1, -2}, {5, 5, 3}, {5, -3, 5}, {3, 5, -5}, {-1, 1, 1}};
    Mat<Rational> m(7, 3, Rational(0));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Rational(pts[i][j]);
    return m;
}

inline Mat<Rational> coordinate_lines() {
    long pts[7][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    Mat<Rational> m(7, 3, Rational(0));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Rational(pts[i][j]);
    return m;
}

// 25(x^4+y^4+z^4) - 34(x^2y^2+x^2z^2+y^2z^2)
inline Polynomial<Rational> edge_quartic(const RingPtr<Rational>& r) {
    using scorza::poly_pow;
    using scorza::poly_var;
    using scorza::scale;
    auto x = poly_var(r, 0), y = poly_var(r, 1), z = poly_var(r, 2);
    return scale(poly_pow(x, 4) + poly_pow(y, 4) + poly_pow(z, 4), Rational(25)) -
           scale(poly_pow(x, 2) * poly_pow(y, 2) + poly_pow(x, 2) * poly_pow(z, 2) +
                     poly_pow(y, 2) * poly_pow(z, 2),
                 Rational(34));
}

// x^4+y^4+z^4 + 30(x^2y^2+x^2z^2+y^2z^2)
inline Polynomial<Rational> four_ovals_quartic(const RingPtr<Rational>& r) {
    using scorza::poly_pow;
    using scorza::poly_var;
    using scorza::scale;
    auto x = poly_var(r, 0), y = poly_var(r, 1), z = poly_var(r, 2);
    return poly_pow(x, 4) + poly_pow(y, 4) + poly_pow(z, 4) +
           scale(poly_pow(x, 2) * poly_pow(y, 2) + poly_pow(x, 2) * poly_pow(z, 2) +
                     poly_pow(y, 2) * poly_pow(z, 2),
                 Rational(30));
}

// x^4 + (10/3)x^2y^2 + y^4 + (10/3)x^2z^2 + (10/3)y^2z^2 + z^4
inline Polynomial<Rational> modified_fiber_quartic(const RingPtr<Rational>& r) {
    using scorza::poly_pow;
    using scorza::poly_var;
    using scorza::scale;
    auto x = poly_var(r, 0), y = poly_var(r, 1), z = poly_var(r, 2);
    return poly_pow(x, 4) + poly_pow(y, 4) + poly_pow(z, 4) +
           scale(poly_pow(x, 2) * poly_pow(y, 2) + poly_pow(x, 2) * poly_pow(z, 2) +
                     poly_pow(y, 2) * poly_pow(z, 2),
                 make_rational(10, 3));
}

inline Polynomial<Rational> klein_quartic(const RingPtr<Rational>& r) {
    using scorza::poly_pow;
    using scorza::poly_var;
    auto x = poly_var(r, 0), y = poly_var(r, 1), z = poly_var(r, 2);
    return x * poly_pow(y, 3) + y * poly_pow(z, 3) + z * poly_pow(x, 3);
}

// the printed quartic of the coordinate-lines example
inline Polynomial<Rational> alg3_quartic(const RingPtr<Rational>& r) {
    using scorza::poly_from_terms;
    using scorza::Term;
    // coefficients on the grevlex-descending degree-4 monomials in x0,x1,x2:
    // x0^4 x0^3x1 x0^2x1^2 x0x1^3 x1^4 x0^3x2 x0^2x1x2 x0x1^2x2 x1^3x2
    // x0^2x2^2 x0x1x2^2 x1^2x2^2 x0x2^3 x1x2^3 x2^4
    long coeffs[15] = {81, 198, -41, -198, 81, -198, -1561, -1561, 198, -41, -1561, -41, 198, -198, 81};
    auto basis = scorza::monomial_basis(r, 4);
    std::vector<Term<Rational>> ts;
    for (int i = 0; i < 15; ++i)
        if (coeffs[i]) ts.push_back({basis[i], Rational(coeffs[i])});
    return poly_from_terms(r, std::move(ts));
}

// the printed first three columns of the bitangent matrix (rows 0..7),
// given as coefficient triples of linear forms in x0,x1,x2; row-scalar
// freedom is resolved by the test
inline std::vector<std::array<std::array<Rational, 3>, 3>> alg3_btm_columns() {
    auto q = [](long n, long d = 1) { return make_rational(n, d); };
    std::vector<std::array<std::array<Rational, 3>, 3>> rows(8);
    auto set = [&](int row, int col, Rational a, Rational b, Rational c) {
        rows[row][col] = {a, b, c};
    };
    set(0, 0, q(0), q(0), q(0));
    set(0, 1, q(3), q(0), q(0));
    set(0, 2, q(0), q(3), q(0));
    set(1, 0, q(3), q(0), q(0));
    set(1, 1, q(0), q(0), q(0));
    set(1, 2, q(777, 143), q(1239, 143), q(-378, 143));
    set(2, 0, q(0), q(3), q(0));
    set(2, 1, q(777, 143), q(1239, 143), q(-378, 143));
    set(2, 2, q(0), q(0), q(0));
    set(3, 0, q(0), q(0), q(3));
    set(3, 1, q(1239, 143), q(-378, 143), q(777, 143));
    set(3, 2, q(-378, 143), q(777, 143), q(1239, 143));
    set(4, 0, q(11), q(11), q(11));
    set(4, 1, q(126, 13), q(287, 13), q(133, 13));
    set(4, 2, q(133, 13), q(126, 13), q(287, 13));
    set(5, 0, q(-1), q(-2), q(-3));
    set(5, 1, q(-756, 143), q(-448, 143), q(-525, 143));
    set(5, 2, q(119, 143), q(-189, 143), q(-1113, 143));
    set(6, 0, q(-2), q(-3), q(-1));
    set(6, 1, q(-189, 143), q(-1113, 143), q(119, 143));
    set(6, 2, q(-392, 143), q(-84, 143), q(-161, 143));
    set(7, 0, q(-3), q(-1), q(-2));
    set(7, 1, q(-84, 143), q(-161, 143), q(-392, 143));
    set(7, 2, q(-525, 143), q(-756, 143), q(-448, 143));
    return rows;
}

inline scorza::HilbertBurch<Rational> klein_hb() {
    using scorza::poly_var;
    auto r = scorza::PolynomialRing<Rational>::make({"x0", "x1", "x2"}, Rational(1));
    auto x0 = poly_var(r, 0), x1 = poly_var(r, 1), x2 = poly_var(r, 2);
    PolyMat<Rational> m(2, 3, Polynomial<Rational>(r));
    m.at(0, 0) = x1;
    m.at(0, 1) = x2;
    m.at(0, 2) = x0;
    m.at(1, 0) = x0 * x0;
    m.at(1, 1) = x1 * x1;
    m.at(1, 2) = x2 * x2;
    return scorza::make_hilbert_burch(std::move(m));
}

// Edge's representation of his quartic: zero diagonal, linear entries
inline scorza::SymDetRep<Rational> edge_rep(const RingPtr<Rational>& r) {
    using scorza::poly_var;
    using scorza::scale;
    auto lin = [&](long a, long b, long c) {
        return scale(poly_var(r, 0), Rational(a)) + scale(poly_var(r, 1), Rational(b)) +
               scale(poly_var(r, 2), Rational(c));
    };
    PolyMat<Rational> m(4, 4, Polynomial<Rational>(r));
    m.at(0, 1) = lin(1, 2, 0);
    m.at(0, 2) = lin(2, 0, 1);
    m.at(0, 3) = lin(0, 1, -2);
    m.at(1, 2) = lin(0, 1, 2);
    m.at(1, 3) = lin(-2, 0, 1);
    m.at(2, 3) = lin(1, -2, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) m.at(i, j) = m.at(j, i);
    return scorza::make_symdetrep(std::move(m));
}

// the printed modification M'_{1234} of the Edge representation
inline scorza::SymDetRep<Rational> modified_edge_rep(const RingPtr<Rational>& r) {
    using scorza::poly_var;
    using scorza::scale;
    auto lin = [&](long a, long b, long c) {
        return scale(poly_var(r, 0), Rational(a)) + scale(poly_var(r, 1), Rational(b)) +
               scale(poly_var(r, 2), Rational(c));
    };
    PolyMat<Rational> m(4, 4, Polynomial<Rational>(r));
    m.at(0, 1) = lin(1, -2, 0);
    m.at(0, 2) = lin(-2, 0, 1);
    m.at(0, 3) = lin(0, 1, 2);
    m.at(1, 2) = lin(0, 1, -2);
    m.at(1, 3) = lin(2, 0, 1);
    m.at(2, 3) = lin(1, 2, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) m.at(i, j) = m.at(j, i);
    return scorza::make_symdetrep(std::move(m));
}

}  // namespace golden

#endif
