#pragma once

#include "esa/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace esa {

/// Closed rational interval; lo == hi means the root is known exactly.
struct Interval {
    Rational lo;
    Rational hi;
    Rational width() const { return hi - lo; }
    bool exact() const { return lo == hi; }
};

/// Sturm chain of a polynomial with primitive-part remainders.
class SturmChain {
public:
    explicit SturmChain(const Polynomial& p);
    /// Sign variations of the chain at x.
    int variations(const Rational& x) const;
    /// Number of distinct real roots in (a, b].
    int count(const Rational& a, const Rational& b) const;
    /// Number of distinct real roots overall.
    int count_all() const;
    const std::vector<Polynomial>& chain() const { return chain_; }

private:
    std::vector<Polynomial> chain_;
};

/// Real algebraic number: the unique root of a square-free polynomial in a
/// closed isolating interval. Endpoints are either non-roots with opposite
/// signs or coincide with the root itself.
class AlgebraicReal {
public:
    AlgebraicReal() = default;
    AlgebraicReal(Polynomial defining, Interval interval);
    static AlgebraicReal from_rational(const Rational& q);

    const Polynomial& defining() const { return defining_; }
    const Interval& interval() const { return interval_; }
    bool is_exact() const { return interval_.exact(); }

    /// One bisection step; returns the narrowed value.
    AlgebraicReal bisected() const;
    /// Narrowed copy whose interval width is at most `width`.
    AlgebraicReal refined(const Rational& width) const;
    /// Exact value when the number is rational. A rational root of the
    /// primitive defining polynomial has a denominator dividing its leading
    /// coefficient, so one refinement below 1/lc decides it.
    std::optional<Rational> as_rational() const;
    /// -1, 0, 1 comparing with a rational.
    int compare(const Rational& q) const;
    double to_double() const;
    /// Decimal rendering with `digits` significant digits.
    std::string to_decimal(int digits) const;

private:
    Polynomial defining_;
    Interval interval_;
};

/// Total order on real algebraic numbers.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);

struct IsolatedRoot {
    Interval interval;
    int multiplicity = 1;
    /// Square-free factor carrying the root.
    Polynomial factor;
    AlgebraicReal value() const { return AlgebraicReal(factor, interval); }
};

/// All real roots of p, sorted ascending, with multiplicities. Intervals are
/// pairwise disjoint; rational roots found on bisection points come back as
/// degenerate intervals. Throws std::domain_error on the zero polynomial.
std::vector<IsolatedRoot> sturm_isolate(const Polynomial& p);

/// Real roots of p as algebraic numbers (multiplicity dropped).
std::vector<AlgebraicReal> real_roots(const Polynomial& p);

/// Bisects until width <= width; returns the narrowed interval.
Interval algebraic_refine(const AlgebraicReal& x, const Rational& width);

}  // namespace esa
