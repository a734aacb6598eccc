#include "esa/indicial.hpp"

#include <stdexcept>

namespace esa {

void IndicialSpec::validate() const {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (l < 0) throw std::invalid_argument("l must be nonnegative");
}

Polynomial build_indicial(const IndicialSpec& spec) {
    spec.validate();
    const long big_n = spec.effective_dimension();
    Polynomial p = Polynomial::constant(spec.m % 2 == 0 ? 1 : -1);
    for (long j = 1; j <= spec.m; ++j) {
        p *= Polynomial::linear_factor(ratio(big_n + 4 * j - 5, 2));
        p *= Polynomial::linear_factor(ratio(-(big_n - 4 * j + 1), 2));
    }
    return p + Polynomial::constant(spec.c);
}

Polynomial euler_quartic(const EulerParams& p) {
    Polynomial z = Polynomial::monomial(1, 1);
    Polynomial one = Polynomial::constant(1);
    Polynomial two = Polynomial::constant(2);
    Polynomial three = Polynomial::constant(3);
    return z * (z - one) * (z - two) * (z - three) + p.c1 * (z * (z - one) + (z - two) * (z - three)) +
           Polynomial::constant(p.c2);
}

EulerParams euler_params(int n, int l, const Rational& c) {
    if (n < 2 || l < 0) throw std::invalid_argument("euler_params: need n >= 2, l >= 0");
    const long big_n = n + 2L * l;
    Rational c1 = ratio(-(big_n - 1) * (big_n - 3), 4);
    return {c1, c1 * c1 + c};
}

ClosedFormRoots quartic_roots_closed_form(const EulerParams& p, mpfr_prec_t precision) {
    Rational inner = 1 - 4 * p.c1 + p.c1 * p.c1 - p.c2;
    BigComplex s = sqrt(BigComplex::from_rational(inner, 0, precision));
    BigComplex base = BigComplex::from_rational(5 - 4 * p.c1, 0, precision);
    BigFloat four(4, precision);
    BigComplex plus = sqrt(base + s * four);
    BigComplex minus = sqrt(base - s * four);
    BigComplex mid = BigComplex::from_rational(Rational(3, 2), 0, precision);
    BigFloat half(Rational(1, 2), precision);
    return {{mid - plus * half, mid - minus * half, mid + minus * half, mid + plus * half}, inner};
}

std::vector<TrajectoryRow> root_trajectories(int m, int n, int l, const std::vector<Rational>& c_grid,
                                             mpfr_prec_t precision) {
    IndicialSpec base{m, n, l, 0};
    base.validate();
    Polynomial d0 = build_indicial(base);
    return trace_roots([&d0](const Rational& c) { return d0 + Polynomial::constant(c); }, c_grid, precision);
}

}  // namespace esa
