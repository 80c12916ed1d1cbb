#include "doctest.h"

#include "scorza/invariants.hpp"
#include "scorza/seven_points.hpp"

using namespace scorza;

namespace {

using PQ = Polynomial<Rational>;

Mat<Rational> edge_points() {
    long pts[7][3] = {{1, 2, 0}, {2, 0, 1}, {0, 1, -2}, {5, 5, 3}, {5, -3, 5}, {3, 5, -5}, {-1, 1, 1}};
    Mat<Rational> m(7, 3, Rational(0));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Rational(pts[i][j]);
    return m;
}

PQ edge_quartic(const RingPtr<Rational>& r) {
    PQ a = poly_var(r, 0), b = poly_var(r, 1), c = poly_var(r, 2);
    return scale(poly_pow(a, 4) + poly_pow(b, 4) + poly_pow(c, 4), Rational(25)) -
           scale(poly_pow(a, 2) * poly_pow(b, 2) + poly_pow(a, 2) * poly_pow(c, 2) +
                     poly_pow(b, 2) * poly_pow(c, 2),
                 Rational(34));
}

HilbertBurch<Rational> klein_hb() {
    auto r = PolynomialRing<Rational>::make({"x0", "x1", "x2"}, Rational(1));
    PQ x0 = poly_var(r, 0), x1 = poly_var(r, 1), x2 = poly_var(r, 2);
    PolyMat<Rational> m(2, 3, PQ(r));
    m.at(0, 0) = x1;
    m.at(0, 1) = x2;
    m.at(0, 2) = x0;
    m.at(1, 0) = x0 * x0;
    m.at(1, 1) = x1 * x1;
    m.at(1, 2) = x2 * x2;
    return make_hilbert_burch(std::move(m));
}

}  // namespace

TEST_CASE("the seven Edge points produce the Edge quartic") {
    auto Z = make_point_config(edge_points());
    PQ f = quartic_from_lines(Z);
    PQ expected = edge_quartic(f.ring);
    CHECK(proportional(f, expected));
    // monic normalization: 25 y0^4 - 34 ... scaled by 1/25
    CHECK(f == monic(expected));
}

TEST_CASE("the Klein Hilbert-Burch matrix produces the Klein quartic") {
    auto hb = klein_hb();
    PQ f = quartic_from_hilbert_burch(hb);
    auto r = f.ring;
    PQ expected = poly_var(r, 0) * poly_pow(poly_var(r, 1), 3) + poly_var(r, 1) * poly_pow(poly_var(r, 2), 3) +
                  poly_pow(poly_var(r, 0), 3) * poly_var(r, 2);
    CHECK(proportional(f, expected));
}

TEST_CASE("gradient Hilbert-Burch matrix produces the printed Lueroth quartic") {
    auto r = PolynomialRing<Rational>::make({"x0", "x1", "x2"}, Rational(1));
    PQ x0 = poly_var(r, 0), x1 = poly_var(r, 1), x2 = poly_var(r, 2);
    // second row is the gradient of x0^2 x1 + x1^2 x2 + x2^2 x0 + x0^3
    PolyMat<Rational> m(2, 3, PQ(r));
    m.at(0, 0) = x0;
    m.at(0, 1) = x1;
    m.at(0, 2) = x2;
    m.at(1, 0) = scale(x0 * x0, Rational(3)) + scale(x0 * x1, Rational(2)) + x2 * x2;
    m.at(1, 1) = x0 * x0 + scale(x1 * x2, Rational(2));
    m.at(1, 2) = x1 * x1 + scale(x0 * x2, Rational(2));
    PQ f = quartic_from_hilbert_burch(make_hilbert_burch(std::move(m)));

    auto yr = f.ring;
    PQ y0 = poly_var(yr, 0), y1 = poly_var(yr, 1), y2 = poly_var(yr, 2);
    PQ expected = scale(poly_pow(y0, 3) * y1, Rational(2)) - scale(poly_pow(y0, 2) * poly_pow(y1, 2), Rational(2)) -
                  y0 * poly_pow(y1, 3) - poly_pow(y0, 3) * y2 -
                  scale(poly_pow(y0, 2) * y1 * y2, Rational(2)) + scale(y0 * poly_pow(y1, 2) * y2, Rational(4)) +
                  scale(poly_pow(y1, 3) * y2, Rational(2)) + poly_pow(y0, 2) * poly_pow(y2, 2) -
                  scale(y0 * y1 * poly_pow(y2, 2), Rational(2)) + poly_pow(y1, 2) * poly_pow(y2, 2) -
                  y0 * poly_pow(y2, 3) - y1 * poly_pow(y2, 3);
    CHECK(proportional(f, expected));
}

TEST_CASE("hilbert_burch_from_points round trips through its minors") {
    auto Z = make_point_config(edge_points());
    auto hb = hilbert_burch_from_points(Z);
    auto r = entry_ring(hb.m);
    // minors vanish on the seven dual points
    auto ms = minors(2, hb.m);
    for (int i = 0; i < 7; ++i) {
        std::vector<Rational> pt{Z.pts.at(i, 0), Z.pts.at(i, 1), Z.pts.at(i, 2)};
        for (const auto& mm : ms) CHECK(is_zero(evaluate(mm, pt)));
    }
    auto dd = dimension_and_degree(make_ideal(r, ms));
    CHECK(dd.projective_dimension == 0);
    CHECK(dd.degree == 7);
}

TEST_CASE("degenerate configurations are rejected") {
    Mat<Rational> pts(7, 3, Rational(0));
    long raw[7][3] = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 3; ++j) pts.at(i, j) = Rational(raw[i][j]);
    CHECK_THROWS_WITH_AS(make_point_config(std::move(pts)), doctest::Contains("DegenerateConfiguration"),
                         Error);
}

TEST_CASE("linear-algebra elimination agrees with the Groebner elimination (dual route)") {
    // run steps 2..4 with the generic elimination machinery on the Klein matrix
    auto hb = klein_hb();
    PQ fast = quartic_from_hilbert_burch(hb);

    RingPtr<Rational> xr = entry_ring(hb.m);
    RingPtr<Rational> xy =
        PolynomialRing<Rational>::make({"x0", "x1", "x2", "y0", "y1", "y2"}, Rational(1));
    std::vector<int> x_up{0, 1, 2}, y_up{3, 4, 5};
    PolyMat<Rational> nc(3, 3, PQ(xy));
    for (int j = 0; j < 3; ++j) {
        nc.at(0, j) = map_to_ring(hb.m.at(0, j), xy, y_up);
        nc.at(1, j) = map_to_ring(hb.m.at(0, j), xy, x_up);
        nc.at(2, j) = map_to_ring(hb.m.at(1, j), xy, x_up);
    }
    PQ net = determinant(nc);
    std::vector<PQ> N;
    for (int i = 0; i < 3; ++i) N.push_back(diff(net, 3 + i));
    PolyMat<Rational> jm(3, 3, PQ(xy));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) jm.at(i, j) = diff(N[j], i);
    PQ jac = determinant(jm);

    std::vector<PQ> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(poly_var(xy, 3 + i) - N[i]);
    gens.push_back(jac);
    Ideal<Rational> I = make_ideal(xy, gens);
    Ideal<Rational> E = eliminate(I, {0, 1, 2});
    REQUIRE(E.gens.size() >= 1);
    // the elimination ideal is principal, generated by the quartic
    PQ gen = E.gens[0];
    for (const auto& g : E.gens) CHECK(ideal_contains(make_ideal(E.ring, {gen}), g));
    PQ fast_mapped = map_to_ring(fast, E.ring);
    CHECK(proportional(gen, fast_mapped));
}
