#pragma once

#include "esa/bigfloat.hpp"
#include "esa/polynomial.hpp"
#include "esa/trajectories.hpp"

#include <array>
#include <vector>

namespace esa {

/// Radial problem ((-Delta)^m + c|x|^{-2m}) restricted to the harmonic
/// degree l in dimension n.
struct IndicialSpec {
    int m = 1;
    int n = 2;
    int l = 0;
    Rational c = 0;

    /// Throws std::invalid_argument unless m >= 1, n >= 2, l >= 0.
    void validate() const;
    /// n + 2l; the indicial polynomial depends on n and l only through it.
    int effective_dimension() const { return n + 2 * l; }
};

struct EulerParams {
    Rational c1 = 0;
    Rational c2 = 0;
};

/// D_{m,n,l}(c; z) = (-1)^m prod_{j=1}^m (z - (N+4j-5)/2)(z + (N-4j+1)/2) + c,
/// N = n + 2l.
Polynomial build_indicial(const IndicialSpec& spec);

/// D_2(c1, c2; z) = z(z-1)(z-2)(z-3) + c1 [z(z-1) + (z-2)(z-3)] + c2.
Polynomial euler_quartic(const EulerParams& p);

/// c1 = -(N-1)(N-3)/4, c2 = c1^2 + c with N = n + 2l.
EulerParams euler_params(int n, int l, const Rational& c);

/// The roots alpha_1..alpha_4 by the closed radical formulas, principal
/// square roots throughout.
struct ClosedFormRoots {
    std::array<BigComplex, 4> alpha;
    /// 1 - 4 c1 + c1^2 - c2
    Rational inner_radicand;
};
ClosedFormRoots quartic_roots_closed_form(const EulerParams& p, mpfr_prec_t precision = 256);

/// Root trajectories of D_{m,n,l}(c; .) along a c grid.
std::vector<TrajectoryRow> root_trajectories(int m, int n, int l, const std::vector<Rational>& c_grid,
                                             mpfr_prec_t precision = 128);

}  // namespace esa
