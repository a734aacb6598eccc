#include "doctest.h"

#include "esa/certified_roots.hpp"
#include "esa/indicial.hpp"
#include "esa/real_roots.hpp"

#include <cmath>
#include <random>

using namespace esa;

namespace {

Polynomial d(int m, int n, int l, const Rational& c) { return build_indicial({m, n, l, c}); }

Rational random_rational(std::mt19937& rng, int range, int den) {
    std::uniform_int_distribution<int> num(-range * den, range * den);
    std::uniform_int_distribution<int> dd(1, den);
    Rational q(num(rng), dd(rng));
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("exact roots of D_{5,20,0}(0)") {
    auto set = certified_roots(d(5, 20, 0, 0), 128);
    REQUIRE(set.roots.size() == 10);
    const std::vector<Rational> expected{Rational(-17, 2), Rational(-13, 2), Rational(-9, 2), Rational(-5, 2),
                                         Rational(-1, 2),  Rational(19, 2),  Rational(23, 2), Rational(27, 2),
                                         Rational(31, 2),  Rational(35, 2)};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        REQUIRE(set.roots[i].exact.has_value());
        CHECK(*set.roots[i].exact == expected[i]);
        CHECK(set.roots[i].radius.is_zero());
    }
    auto pos = real_part_position(set, Rational(-1, 2));
    REQUIRE(pos.has_value());
    CHECK(pos->left == 4);
    CHECK(pos->on == 1);
    CHECK(pos->right == 5);
}

TEST_CASE("z^2 + 1") {
    auto set = certified_roots(Polynomial({1, 0, 1}), 128);
    REQUIRE(set.roots.size() == 2);
    for (const auto& r : set.roots) {
        CHECK(r.radius < pow2(-40, 128));
        CHECK(std::abs(std::abs(r.center.im.to_double()) - 1.0) < 1e-30);
        CHECK_FALSE(r.real);
    }
    CHECK(set.roots[0].center.im.sign() < 0);
    auto pos = real_part_position(set, Rational(-1, 2));
    REQUIRE(pos.has_value());
    CHECK(pos->left == 0);
    CHECK(pos->on == 0);
    CHECK(pos->right == 2);
}

TEST_CASE("D_{5,20,0}(1.5e10) real parts") {
    auto set = certified_roots(d(5, 20, 0, Rational(15000000000)), 128);
    auto re = set.real_parts();
    const std::vector<double> expected{-10.03, -7.326, -7.326, -0.496, -0.496, 9.496, 9.496, 16.33, 16.33, 19.03};
    REQUIRE(re.size() == expected.size());
    for (std::size_t i = 0; i < re.size(); ++i) CHECK(re[i] == doctest::Approx(expected[i]).epsilon(2e-3));
    auto pos = real_part_position(set, Rational(-1, 2));
    REQUIRE(pos.has_value());
    CHECK(pos->left == 3);
    CHECK(pos->right == 7);
}

TEST_CASE("D_{2,8,0}(0) has a root on the line") {
    auto set = certified_roots(d(2, 8, 0, 0), 128);
    auto pos = real_part_position(set, Rational(-1, 2));
    REQUIRE(pos.has_value());
    CHECK(pos->left == 1);
    CHECK(pos->on == 1);
    CHECK(pos->right == 2);
}

TEST_CASE("multiplicities survive") {
    auto set = certified_roots(Polynomial::from_roots({1, 1, -3}), 128);
    REQUIRE(set.roots.size() == 2);
    CHECK(set.roots[0].multiplicity == 1);
    CHECK(set.roots[1].multiplicity == 2);
    CHECK(*set.roots[1].exact == 1);
    CHECK_THROWS_AS(certified_roots(Polynomial::constant(3), 128), std::domain_error);
}

TEST_CASE("unresolved when a disk straddles the line") {
    // Complex pair with real part exactly -1/2 can never be separated numerically.
    Polynomial p({Rational(5, 4), 1, 1});
    auto set = certified_roots(p, 128);
    CHECK_FALSE(real_part_position(set, Rational(-1, 2)).has_value());
}

TEST_CASE("disk-sum identity and real-root agreement with Sturm") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> deg(1, 10);
    for (int trial = 0; trial < 60; ++trial) {
        int n = deg(rng);
        std::vector<Rational> c;
        for (int k = 0; k < n; ++k) c.push_back(random_rational(rng, 9, 4));
        c.push_back(random_rational(rng, 9, 4) == 0 ? Rational(1) : Rational(1 + trial % 3));
        Polynomial p(c);
        auto set = certified_roots(p, 128);
        int real = 0;
        BigFloat sum_re(256), sum_im(256), slack(256);
        for (const auto& r : set.roots) {
            if (r.real) real += 1;
            BigFloat mult(r.multiplicity, 256);
            sum_re += mult * r.center.re;
            sum_im += mult * r.center.im;
            slack += mult * r.radius;
        }
        int sturm_real = static_cast<int>(sturm_isolate(p).size());
        CHECK(real == sturm_real);
        BigFloat expect(-Rational(p.coeff(p.degree() - 1) / p.leading()), 256);
        BigFloat tiny = pow2(-100, 256) * (BigFloat(1, 256) + abs(expect));
        CHECK(abs(sum_re - expect) <= slack + tiny);
        CHECK(abs(sum_im) <= slack + tiny);
    }
}

TEST_CASE("pairing symmetry on random indicial specs") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> mm(1, 5), nn(2, 24), ll(0, 10);
    for (int trial = 0; trial < 40; ++trial) {
        int m = mm(rng);
        Rational c = random_rational(rng, 2000, 3);
        auto set = certified_roots(d(m, nn(rng), ll(rng), c), 128);
        std::vector<double> re;
        std::vector<double> rad;
        for (const auto& r : set.roots)
            for (int k = 0; k < r.multiplicity; ++k) {
                re.push_back(r.center.re.to_double());
                rad.push_back(r.radius.to_double());
            }
        for (int j = 0; j < 2 * m; ++j) {
            int pj = set.partner(j);
            CHECK(std::abs(re[static_cast<std::size_t>(j)] + re[static_cast<std::size_t>(pj)] - (2 * m - 1)) <=
                  rad[static_cast<std::size_t>(j)] + rad[static_cast<std::size_t>(pj)] + 1e-12);
        }
        auto pos = real_part_position(set, Rational(-1, 2));
        if (pos) CHECK(pos->left + pos->on <= m);
    }
}

TEST_CASE("root trajectories") {
    auto rows = root_trajectories(5, 20, 0, {Rational(5000000000), Rational(15000000000)});
    REQUIRE(rows.size() == 20);
    double first = 0, second = 0;
    for (const auto& r : rows)
        if (r.j == 5) (r.c == 5000000000 ? first : second) = r.re;
    CHECK(first == doctest::Approx(-0.555).epsilon(2e-3));
    CHECK(second == doctest::Approx(-0.496).epsilon(2e-3));

    for (int m = 1; m <= 5; ++m) {
        auto at0 = root_trajectories(m, 7, 1, {Rational(0)});
        for (int j = 1; j <= 2 * m; ++j) {
            double a = at0[static_cast<std::size_t>(j - 1)].re;
            double b = at0[static_cast<std::size_t>(2 * m - j)].re;
            CHECK(a + b == doctest::Approx(2 * m - 1));
        }
    }
    CHECK_THROWS_AS(root_trajectories(2, 3, 0, {Rational(1), Rational(0)}), std::invalid_argument);
}
