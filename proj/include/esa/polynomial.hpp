#pragma once

#include "esa/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace esa {

/// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of x^k;
/// the leading coefficient of a nonzero polynomial is never zero and the zero
/// polynomial has no coefficients (degree -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int power);
    /// x - root
    static Polynomial linear_factor(const Rational& root);
    static Polynomial from_roots(const std::vector<Rational>& roots);
    /// Low-to-high integer coefficients given as decimal strings.
    static Polynomial from_integers(const std::vector<std::string>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k; zero outside 0..degree.
    Rational coeff(int k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    int sign_at(const Rational& x) const;

    Polynomial derivative() const;
    /// q(x) = p(x + a)
    Polynomial shifted(const Rational& a) const;
    /// q(x) = p(-x)
    Polynomial reflected() const;
    /// q(x) = p(s x)
    Polynomial scaled_argument(const Rational& s) const;
    Polynomial monic() const;
    /// Integer polynomial with coprime coefficients and positive content factor,
    /// so the sign of every value is preserved.
    Polynomial primitive() const;
    /// Positive rational c with *this == c * primitive().
    Rational content() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// "3125*x^4 - 83914629120000*x^3 + ..." with the given variable name.
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
DivisionResult divide(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Exact quotient; throws std::logic_error if b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Square-free factors with multiplicity: p = lc * prod f_i^{m_i}, each f_i
/// monic, square-free and pairwise coprime (Yun's algorithm).
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p);

/// Product of the distinct monic irreducible factors of p.
Polynomial square_free_part(const Polynomial& p);

/// Resultant via the Sylvester determinant.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// (-1)^{n(n-1)/2} Res(p, p') / lc(p).
Rational discriminant(const Polynomial& p);

/// Upper bound on the modulus of every complex root (Cauchy).
Rational cauchy_root_bound(const Polynomial& p);

}  // namespace esa
