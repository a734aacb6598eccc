#include "doctest.h"

#include "esa/frobenius.hpp"
#include "esa/oracles.hpp"

#include <cmath>
#include <random>

using namespace esa;

namespace {

Rational random_rational(std::mt19937& rng, int range, int den) {
    std::uniform_int_distribution<int> num(-range * den, range * den);
    std::uniform_int_distribution<int> d(1, den);
    Rational q(num(rng), d(rng));
    q.canonicalize();
    return q;
}

double diff(const BigComplex& a, const BigComplex& b, int k) {
    return (a - b + BigComplex::from_rational(4 * k, 0, 256)).modulus().to_double();
}

bool has(const ResonanceClassification& c, Locus locus, int k) {
    for (const auto& m : c.memberships)
        if (m.locus == locus && m.k == k) return true;
    return false;
}

std::vector<std::vector<int>> orders(const BasisSelection& s) {
    std::vector<std::vector<int>> out;
    for (const auto& d : s.solutions) out.push_back(d.order);
    return out;
}

}  // namespace

TEST_CASE("classify_resonance examples") {
    auto a = classify_resonance(0, 1);
    REQUIRE(a.memberships.size() == 1);
    CHECK(a.memberships[0].locus == Locus::Parabola);
    CHECK(a.memberships[0].k == 0);
    CHECK(a.memberships[0].side == Side::Below);

    auto b = classify_resonance(0, Rational(-9, 16));
    REQUIRE(b.memberships.size() == 1);
    CHECK(b.memberships[0].locus == Locus::Line);
    CHECK(b.memberships[0].relation == "(alpha2-alpha3)/4=0");

    CHECK(classify_resonance(0, -1).generic());
    CHECK(classify_resonance(0, 0).generic());

    Rational c1(-40);
    auto far = classify_resonance(c1, line_c2(c1, 30));
    CHECK(has(far, Locus::Line, 30));
    CHECK(classify_resonance(c1, line_c2(c1, 30), 10).generic());
}

TEST_CASE("memberships imply the exponent relations") {
    std::mt19937 rng(17);
    for (int k = 0; k <= 5; ++k)
        for (int trial = 0; trial < 40; ++trial) {
            Rational c1 = random_rational(rng, 60, 5);
            Rational c2 = line_c2(c1, k);
            REQUIRE(has(classify_resonance(c1, c2), Locus::Line, k));
            auto al = quartic_roots_closed_form({c1, c2}).alpha;
            Rational pivot = Rational(5, 4) - 4 * k * k;
            if (c1 > pivot) {
                CHECK(diff(al[0], al[3], k) < 1e-30);
            } else if (c1 < pivot) {
                CHECK(diff(al[1], al[2], k) < 1e-30);
            }

            c2 = parabola_c2(c1, k);
            REQUIRE(has(classify_resonance(c1, c2), Locus::Parabola, k));
            al = quartic_roots_closed_form({c1, c2}).alpha;
            pivot = Rational(5, 4) - 8 * k * k;
            if (k == 0 && c1 > pivot) {
                // complex pair: the closed forms give alpha1 = alpha2, alpha3 = alpha4
                CHECK(diff(al[0], al[1], 0) < 1e-30);
                CHECK(diff(al[2], al[3], 0) < 1e-30);
            } else if (c1 > pivot) {
                CHECK(diff(al[0], al[2], k) < 1e-30);
                CHECK(diff(al[1], al[3], k) < 1e-30);
            } else if (c1 < pivot) {
                CHECK(diff(al[0], al[1], k) < 1e-30);
                CHECK(diff(al[2], al[3], k) < 1e-30);
            }
        }
    for (int k = 0; k <= 3; ++k) {
        Rational c1 = Rational(5, 4) - 4 * k * k;
        auto al = quartic_roots_closed_form({c1, line_c2(c1, k)}).alpha;
        CHECK(diff(al[0], al[1], 0) < 1e-30);
        CHECK(diff(al[2], al[3], 0) < 1e-30);
    }
}

TEST_CASE("off the loci no exponent difference is a nonpositive multiple of 4") {
    std::mt19937 rng(23);
    int checked = 0;
    while (checked < 200) {
        Rational c1 = random_rational(rng, 30, 7), c2 = random_rational(rng, 300, 7);
        if (!classify_resonance(c1, c2).generic()) continue;
        ++checked;
        auto al = quartic_roots_closed_form({c1, c2}).alpha;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                BigComplex q = (al[static_cast<std::size_t>(i)] - al[static_cast<std::size_t>(j)]) *
                               BigFloat(Rational(1, 4), 256);
                double re = q.re.to_double(), im = q.im.to_double();
                bool hit = std::abs(im) < 1e-30 && re <= 1e-30 && std::abs(re - std::round(re)) < 1e-30;
                CHECK_FALSE(hit);
            }
        BasisSelection s = select_fundamental_system(c1, c2, 1.0);
        for (const auto& d : s.solutions)
            CHECK_NOTHROW(eval_0F3({d.parameters[0], d.parameters[1], d.parameters[2]}, 0.5, 1e-20));
    }
}

TEST_CASE("eval_0F3") {
    CHECK(eval_0F3({1.5, 2.0, -0.5}, 0.0, 1e-20).value == std::complex<double>(1, 0));
    SeriesValue v = eval_0F3({1, 1, 1}, 1.0, 1e-20);
    double direct = 0, fact = 1;
    for (int k = 0; k < 60; ++k) {
        if (k > 0) fact *= k;
        direct += 1.0 / (fact * fact * fact * fact);
    }
    CHECK(v.value.real() == doctest::Approx(direct).epsilon(1e-15));
    CHECK(v.tail_bound <= 1e-20);
    CHECK_THROWS_AS(eval_0F3({-2.0, 1, 1}, 0.3, 1e-20), ResonanceError);
    CHECK_THROWS_AS(eval_0F3({0.0, 1, 1}, 0.3, 1e-20), ResonanceError);
    CHECK_THROWS_AS(eval_0F3({1, 1, 1}, 1e6, 1e-20, 5), std::runtime_error);
}

TEST_CASE("basis selection follows the case displays") {
    auto g = select_fundamental_system(0, -1, 1.0);
    CHECK(g.tag == CaseTag::Generic);
    CHECK(g.solutions.size() == 4);
    for (const auto& d : g.solutions) CHECK(d.kind == SolutionKind::SeriesF03);
    CHECK(orders(g) == std::vector<std::vector<int>>{{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}});

    auto a_low = select_fundamental_system(0, Rational(-9, 16), 1.0);
    CHECK(a_low.tag == CaseTag::A3a_lower);
    CHECK(a_low.solutions[1].kind == SolutionKind::MeijerG20);
    CHECK(a_low.solutions[1].order == std::vector<int>{2, 3, 1, 4});

    Rational c1(2);
    auto a_up = select_fundamental_system(c1, line_c2(c1, 0), 1.0);
    CHECK(a_up.tag == CaseTag::A3a_upper);
    CHECK(a_up.solutions[0].order == std::vector<int>{1, 4, 2, 3});

    auto b_low = select_fundamental_system(0, 1, 1.0);
    CHECK(b_low.tag == CaseTag::A3b_lower);
    CHECK(b_low.solutions[0].order == std::vector<int>{1, 2, 3, 4});
    CHECK(b_low.solutions[2].order == std::vector<int>{3, 4, 1, 2});

    auto b_up = select_fundamental_system(2, parabola_c2(2, 0), 1.0);
    CHECK(b_up.tag == CaseTag::A3b_upper);
    CHECK(orders(b_up)[0] == std::vector<int>{1, 3, 2, 4});
    CHECK(orders(b_up)[1] == std::vector<int>{2, 4, 1, 3});

    Rational x = Rational(5, 4) - 2 * 1 - 2 * 0;
    auto c = select_fundamental_system(x, line_c2(x, 1), 1.0);
    CHECK(c.classification.lines() == std::vector<int>{0, 1});
    CHECK(c.tag == CaseTag::A3c);

    Rational y = Rational(5, 4) - 4 * 1 + 8 * 2 - 8 * 4;
    auto d = select_fundamental_system(y, line_c2(y, 1), 1.0);
    CHECK(d.classification.parabolas() == std::vector<int>{1, 2});
    CHECK(d.tag == CaseTag::A3d);
    CHECK(d.solutions[0].kind == SolutionKind::MeijerG40);
    CHECK(d.solutions[1].kind == SolutionKind::MeijerG30);
    CHECK(d.solutions[1].argument_sign == -1);
    CHECK(d.solutions[1].order == std::vector<int>{2, 3, 4, 1});
    CHECK(d.solutions[2].order == std::vector<int>{3, 4, 1, 2});

    Rational w = Rational(5, 4) - 4 - 0;
    auto nc = select_fundamental_system(w, parabola_c2(w, 1), 1.0);
    if (nc.classification.lines().empty()) CHECK(nc.tag == CaseTag::NotCovered);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Rational p = random_rational(rng, 20, 4);
        auto s = select_fundamental_system(p, trial % 2 ? line_c2(p, trial % 4) : random_rational(rng, 50, 3), 1.0);
        CHECK((s.tag == CaseTag::NotCovered) == s.solutions.empty());
    }
}

TEST_CASE("ODE residual of series members") {
    auto zero = select_fundamental_system(0, 0, 0.0);
    REQUIRE(zero.tag == CaseTag::Generic);
    for (int j = 0; j < 4; ++j) CHECK(ode_residual(zero, j, 0.0, 0.5) < 1e-30);

    std::mt19937 rng(41);
    std::uniform_real_distribution<double> unit(-1, 1), radius(0.25, 2.0);
    const std::vector<std::pair<Rational, Rational>> points{
        {0, -1}, {3, 7}, {-5, 2}, {0, 1}, {0, Rational(-9, 16)}, {2, line_c2(2, 0)}, {Rational(-7, 2), line_c2(Rational(-7, 2), 1)}};
    for (const auto& [c1, c2] : points) {
        auto sel = select_fundamental_system(c1, c2, 1.0);
        for (int trial = 0; trial < 20; ++trial) {
            std::complex<double> lambda(2 * unit(rng), 2 * unit(rng));
            double r = radius(rng);
            for (int j = 0; j < 4; ++j)
                if (sel.solutions[static_cast<std::size_t>(j)].kind == SolutionKind::SeriesF03)
                    CHECK(ode_residual(sel, j, lambda, r) < 1e-10);
        }
    }

    auto g = select_fundamental_system(0, -1, 1.0);
    CHECK(ode_residual(g, 0, 1.0, 0.5) < 1e-12);
    std::vector<std::complex<double>> coeffs{{0.3, 1}, {-2, 0.5}, {1, 1}, {0.7, -0.2}};
    double sum = 0;
    for (int j = 0; j < 4; ++j) sum += std::abs(coeffs[static_cast<std::size_t>(j)]) * ode_residual(g, j, 1.5, 0.75);
    CHECK(ode_residual_combination(g, coeffs, 1.5, 0.75) <= sum + 1e-40);

    auto d = select_fundamental_system(0, 1, 1.0);
    CHECK_THROWS_AS(ode_residual(d, 0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ode_residual(g, 0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("resonance geometry identities") {
    GeometryReport rep = resonance_geometry_table(5, 5);
    CHECK(rep.all_hold());
    int tangencies = 0;
    for (const auto& c : rep.checks)
        if (c.identity == "L_k tangent to P_0") ++tangencies;
    CHECK(tangencies == 6);

    // L_1 and L_0 meet at c1 = -3/4, P_1 and P_1 at -27/4.
    CHECK(line_c2(Rational(-3, 4), 1) == line_c2(Rational(-3, 4), 0));
    CHECK(parabola_c2(Rational(-27, 4), 1) != parabola_c2(Rational(-27, 4), 2));

    auto data = figure2_data();
    int lines = 0, parabolas = 0, region = 0;
    for (const auto& s : data) {
        if (s.locus == "line") ++lines;
        if (s.locus == "parabola") ++parabolas;
        if (s.locus == "region") ++region;
        CHECK(s.esa == euler_esa_closed_form({s.c1, s.c2}));
    }
    CHECK(lines == 6 * 161);
    CHECK(parabolas == 4 * 161);
    CHECK(region > 0);
}
