#pragma once

// Exact rational numbers. All symbolic-side arithmetic in the library runs on
// GMP rationals, which are kept canonical (gcd(num, den) = 1, den > 0).

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace esa {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when textual input cannot be read as an exact rational.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "17", "-3/4", "1.25", "1.5e10" or "-2.5E-3" exactly (no binary
/// floating point on the way).
Rational parse_rational(std::string_view text);

/// num/den in canonical form (mpq_class(num, den) alone does not reduce).
Rational ratio(long num, long den);

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Rational& q);

/// Scientific or fixed rendering with `digits` significant figures.
std::string to_decimal(const Rational& q, int digits);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);
int sign(const Rational& q);
Rational abs(const Rational& q);

/// The rational with smallest denominator in the closed interval [lo, hi]
/// (Stern-Brocot descent). Requires lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// lo + (hi - lo) / 2
Rational midpoint(const Rational& lo, const Rational& hi);

}  // namespace esa
