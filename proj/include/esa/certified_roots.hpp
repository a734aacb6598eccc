#pragma once

#include "esa/bigfloat.hpp"
#include "esa/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace esa {

/// Closed disk holding exactly `multiplicity` roots (counted with
/// multiplicity). A rational root found exactly has radius zero and `exact`
/// set; `real` means the root inside the disk is known to be real.
struct CertifiedRoot {
    BigComplex center;
    BigFloat radius;
    int multiplicity = 1;
    bool real = false;
    std::optional<Rational> exact;
};

/// Roots sorted by real part (ties by imaginary part), each listed once with
/// its multiplicity.
struct OrderedRootSet {
    std::vector<CertifiedRoot> roots;
    int degree = 0;
    mpfr_prec_t precision = 0;

    /// Real parts expanded by multiplicity, ascending (length == degree).
    std::vector<double> real_parts() const;
    /// Index of the partner of the j-th expanded root (0-based): j <-> degree-1-j.
    int partner(int j) const { return degree - 1 - j; }
};

class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Certified enclosures of every complex root of p. Starts at
/// `precision_bits`, doubling until every disk is disjoint from every other,
/// up to `max_bits` (PrecisionExhausted beyond that). Throws
/// std::domain_error on constant polynomials.
OrderedRootSet certified_roots(const Polynomial& p, mpfr_prec_t precision_bits, mpfr_prec_t max_bits = 4096);

struct RealPartCount {
    int left = 0;
    int on = 0;
    int right = 0;
};

/// Counts (with multiplicity) roots with Re < t, Re = t, Re > t. Empty when
/// some disk meets the line Re = t and is not an exact root.
std::optional<RealPartCount> real_part_position(const OrderedRootSet& set, const Rational& threshold);

}  // namespace esa
