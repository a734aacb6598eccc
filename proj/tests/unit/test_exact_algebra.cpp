#include "doctest.h"

#include "esa/polynomial_matrix.hpp"
#include "esa/real_roots.hpp"

#include <random>

using namespace esa;

namespace {

Polynomial x_poly() { return Polynomial::monomial(1, 1); }

Polynomial q520() {
    return Polynomial::from_integers({"629847004905001626921946285352115240960000",
                                      "1045471534388841527438982355353600", "429438995162964368031744",
                                      "-83914629120000", "3125"});
}

Rational random_rational(std::mt19937& rng, int range, int den) {
    std::uniform_int_distribution<int> num(-range * den, range * den);
    std::uniform_int_distribution<int> d(1, den);
    Rational q(num(rng), d(rng));
    q.canonicalize();
    return q;
}

Rational cofactor_det(const RationalMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        RationalMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        Rational term = m[0][j] * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : Rational(-term);
    }
    return acc;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("45") == 45);
    CHECK(parse_rational("-585/16") == Rational(-585, 16));
    CHECK(parse_rational("1.5e10") == Rational(15000000000));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational(" -2.50 ") == Rational(-5, 2));
    CHECK(parse_rational("4/8") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1e"), ParseError);
}

TEST_CASE("rational helpers") {
    CHECK(floor(Rational(-7, 2)) == -4);
    CHECK(ceil(Rational(-7, 2)) == -3);
    CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(simplest_between(Rational(32, 100), Rational(34, 100)) == Rational(1, 3));
    CHECK(simplest_between(Rational(-5, 2), Rational(-3, 2)) == -2);
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
    CHECK(to_decimal(Rational(10436424997), 5) == "1.0436e10");
    CHECK(to_decimal(Rational(-585, 16), 6) == "-36.5625");
}

TEST_CASE("poly_shift translates roots") {
    Polynomial z2 = Polynomial::monomial(1, 2);
    CHECK(z2.shifted(0) == z2);

    Polynomial d = Polynomial::from_roots({0, 1, 2, 3});
    Polynomial s = d.shifted(Rational(-1, 2));
    CHECK(s == Polynomial::from_roots({Rational(1, 2), Rational(3, 2), Rational(5, 2), Rational(7, 2)}));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> roots;
        for (int k = 0; k < 5; ++k) roots.push_back(random_rational(rng, 10, 7));
        Rational a = random_rational(rng, 5, 9);
        std::vector<Rational> moved;
        for (const auto& r : roots) moved.push_back(r - a);
        CHECK(Polynomial::from_roots(roots).shifted(a) == Polynomial::from_roots(moved));
    }
}

TEST_CASE("shifted Euler quartic coefficients") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Rational c1 = random_rational(rng, 20, 5);
        Rational c2 = random_rational(rng, 20, 5);
        Polynomial z = x_poly();
        Polynomial d2 = z * (z - Polynomial::constant(1)) * (z - Polynomial::constant(2)) * (z - Polynomial::constant(3)) +
                        c1 * (z * (z - Polynomial::constant(1)) +
                              (z - Polynomial::constant(2)) * (z - Polynomial::constant(3))) +
                        Polynomial::constant(c2);
        Polynomial s = d2.shifted(Rational(-1, 2));
        CHECK(s.coeff(4) == 1);
        CHECK(s.coeff(3) == -8);
        CHECK(s.coeff(2) == Rational(43, 2) + 2 * c1);
        CHECK(s.coeff(1) == -22 - 8 * c1);
        CHECK(s.coeff(0) == Rational(105, 16) + Rational(19, 2) * c1 + c2);
    }
}

TEST_CASE("gcd, division and square-free decomposition") {
    Polynomial p = Polynomial::from_roots({1, 1, -3});
    auto sf = square_free_decomposition(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].first == Polynomial::linear_factor(-3));
    CHECK(sf[0].second == 1);
    CHECK(sf[1].first == Polynomial::linear_factor(1));
    CHECK(sf[1].second == 2);

    Polynomial a = Polynomial::from_roots({1, 2, Rational(1, 3)});
    Polynomial b = Polynomial::from_roots({2, Rational(1, 3), 5});
    CHECK(gcd(a, b) == Polynomial::from_roots({2, Rational(1, 3)}));
    auto [q, r] = divide(a, b);
    CHECK(q * b + r == a);
    CHECK_THROWS_AS(exact_quotient(a, b), std::logic_error);
}

TEST_CASE("resultant and discriminant") {
    Polynomial z4m1 = Polynomial::monomial(1, 4) - Polynomial::constant(1);
    CHECK(discriminant(z4m1) == -256);
    Polynomial quad({Rational(-2), Rational(0), Rational(1)});
    CHECK(discriminant(quad) == 8);
    CHECK(resultant(Polynomial::from_roots({1, 2}), Polynomial::from_roots({3})) == 2);
}

TEST_CASE("sturm_isolate") {
    SUBCASE("z^2 - 2") {
        auto roots = sturm_isolate(Polynomial({-2, 0, 1}));
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].value().compare(Rational(-3, 2)) > 0);
        CHECK(roots[0].value().compare(-1) < 0);
        CHECK(roots[1].value().compare(Rational(7, 5)) > 0);
        CHECK(roots[1].value().compare(Rational(3, 2)) < 0);
        CHECK(roots[0].multiplicity == 1);
    }
    SUBCASE("constructed multiplicity") {
        auto roots = sturm_isolate(Polynomial::from_roots({1, 1, -3}));
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].value().as_rational() == Rational(-3));
        CHECK(roots[0].multiplicity == 1);
        CHECK(roots[1].value().as_rational() == Rational(1));
        CHECK(roots[1].multiplicity == 2);
    }
    SUBCASE("quintic with roots 0, beta, gamma") {
        Polynomial quintic = x_poly() * q520();
        auto roots = sturm_isolate(quintic);
        REQUIRE(roots.size() == 3);
        CHECK(roots[0].value().as_rational() == Rational(0));
        CHECK(sturm_isolate(q520()).size() == 2);
        Interval b = algebraic_refine(roots[1].value(), Rational(1000000));
        Interval g = algebraic_refine(roots[2].value(), Rational(1000000));
        CHECK(b.width() <= 1000000);
        CHECK(b.lo.get_d() == doctest::Approx(1.0436e10).epsilon(1e-4));
        CHECK(g.lo.get_d() == doctest::Approx(1.8324e10).epsilon(1e-4));
        CHECK(roots[1].value().to_decimal(5) == "1.0436e10");
        CHECK(roots[2].value().to_decimal(5) == "1.8324e10");
    }
    SUBCASE("roots shared across factors stay disjoint") {
        Polynomial p = Polynomial::from_roots({Rational(1, 3), Rational(1, 3), Rational(1, 2), 0}) *
                       Polynomial({-2, 0, 1});
        auto roots = sturm_isolate(p);
        REQUIRE(roots.size() == 5);
        for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].interval.hi < roots[i].interval.lo);
    }
    CHECK_THROWS_AS(sturm_isolate(Polynomial()), std::domain_error);
}

TEST_CASE("algebraic numbers") {
    AlgebraicReal sqrt2(Polynomial({-2, 0, 1}), Interval{1, 2});
    Interval prev = sqrt2.interval();
    AlgebraicReal x = sqrt2;
    for (int step = 0; step < 20; ++step) {
        x = x.bisected();
        CHECK(x.interval().lo >= prev.lo);
        CHECK(x.interval().hi <= prev.hi);
        prev = x.interval();
    }
    Interval iv = algebraic_refine(sqrt2, Rational(1, 1000));
    CHECK(iv.width() <= Rational(1, 1000));
    CHECK(iv.lo <= Rational(141421, 100000));
    CHECK(iv.hi >= Rational(141421, 100000));
    CHECK(sqrt2.to_double() == doctest::Approx(1.41421356237));
    CHECK_FALSE(sqrt2.as_rational().has_value());

    // Same number through a different defining polynomial.
    AlgebraicReal other(Polynomial({-2, 0, 1}) * Polynomial({1, 0, 1}), Interval{Rational(13, 10), Rational(3, 2)});
    CHECK(compare(sqrt2, other) == 0);
    AlgebraicReal cube2(Polynomial({-2, 0, 0, 1}), Interval{1, 2});
    CHECK(compare(sqrt2, cube2) > 0);
    CHECK(compare(cube2, AlgebraicReal::from_rational(Rational(5, 4))) > 0);

    AlgebraicReal half(Polynomial({-1, 2}), Interval{0, 1});
    CHECK(half.as_rational() == Rational(1, 2));
}

TEST_CASE("polymatrix_det") {
    PolynomialMatrix id(2);
    id(0, 0) = Polynomial::constant(1);
    id(1, 1) = Polynomial::constant(1);
    CHECK(polymatrix_det(id) == Polynomial::constant(1));

    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        PolynomialMatrix m(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = Polynomial({random_rational(rng, 5, 3), random_rational(rng, 5, 3)});
        Polynomial det = polymatrix_det(m);
        CHECK(det.degree() <= 4);
        for (int s = 0; s < 3; ++s) {
            Rational c = random_rational(rng, 50, 7);
            CHECK(det(c) == cofactor_det(m.evaluate(c)));
        }
    }
}

TEST_CASE("interpolation recovers a polynomial") {
    Polynomial p({3, -1, 0, Rational(2, 3)});
    std::vector<Rational> xs{0, 1, -1, 2}, ys;
    for (const auto& x : xs) ys.push_back(p(x));
    CHECK(interpolate(xs, ys) == p);
}
