#pragma once

#include "esa/certified_roots.hpp"
#include "esa/indicial.hpp"
#include "esa/polynomial_matrix.hpp"
#include "esa/real_roots.hpp"

#include <string>
#include <vector>

namespace esa {

/// Hurwitz matrix of a real polynomial b_0 z^d + b_1 z^{d-1} + ... + b_d:
/// entry (i, j) (1-based) is b_{2j-i}, zero outside 0..d.
RationalMatrix hurwitz_matrix(const Polynomial& p);

/// Hurwitz matrix of p(z) + c over Q[c] (c only enters b_d).
PolynomialMatrix hurwitz_matrix_in_constant(const Polynomial& p);

struct HurwitzData {
    int m = 0, n = 0, l = 0;
    /// D(0; z - 1/2); the c-dependent polynomial is shifted + c.
    Polynomial shifted;
    PolynomialMatrix matrix{1};
    Polynomial det_in_c;
    /// -D(0; -1/2), the root of the last Hurwitz column factor.
    Rational linear_root;
    /// det_in_c / (c - linear_root), unnormalized (degree m - 1).
    Polynomial q_factor;

    /// q_factor divided by its positive content.
    Polynomial q_primitive() const { return q_factor.primitive(); }
};

HurwitzData hurwitz_assemble(int m, int n, int l);

/// Points -1/2 + i t that are roots of p, as real algebraic t with
/// multiplicity. `common` is gcd(Re p(-1/2 + i t), Im p(-1/2 + i t)) in t.
struct AxisRoots {
    Polynomial common;
    std::vector<IsolatedRoot> t_values;
    int count() const;
};
AxisRoots axis_roots_exact(const Polynomial& p);

struct HalfPlaneCount {
    int left = 0;   // Re z < -1/2
    int axis = 0;   // Re z = -1/2
    int right = 0;  // Re z > -1/2
    bool exact = true;
    /// Largest working precision the certified count needed (0 if none).
    mpfr_prec_t precision = 0;
};

/// Exact location of every root of p relative to Re z = -1/2. Roots that are
/// symmetric about the line are split off exactly; the rest are counted
/// from certified disks, escalating along `ladder` and doubling past its
/// end up to `max_bits`.
HalfPlaneCount halfplane_count(const Polynomial& p, const std::vector<mpfr_prec_t>& ladder = {128, 256, 512, 1024},
                               mpfr_prec_t max_bits = 4096);

enum class RealRootClass { TwoRealTwoImaginary, NoRealRoots, FourReal, Other };
std::string to_string(RealRootClass c);

struct QuarticInvariants {
    Rational disc;
    Rational pi;
    Rational lambda;
    RealRootClass real_root_class = RealRootClass::Other;
    /// Distinct real roots (Sturm count).
    int real_roots = 0;
    /// True when one of the two quoted sign rules decided the class.
    bool by_rule = false;
};

/// Disc, Pi = 8ac - 3b^2, Lambda = 64a^3e - 16a^2bd - 16a^2c^2 + 16ab^2c - 3b^4
/// of a quartic az^4 + bz^3 + cz^2 + dz + e. Throws std::invalid_argument
/// unless the degree is exactly 4.
QuarticInvariants quartic_classify(const Polynomial& q);

/// Discriminant of the quadratic Q_{3,n,l}.
Rational disc_q3(int n, int l);

}  // namespace esa
