#pragma once

#include "esa/rational.hpp"

#include <mpfr.h>

#include <string>

namespace esa {

/// Owning wrapper around an mpfr_t. Results of binary operations carry the
/// larger operand precision and are rounded to nearest unless a rounding
/// mode is requested explicitly.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision = 128);
    BigFloat(const Rational& q, mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN);
    BigFloat(long v, mpfr_prec_t precision);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Exact rational value of the binary float.
    Rational to_rational() const;
    std::string to_string(int digits = 20) const;
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    /// -1, 0, 1 exact comparison with a rational.
    int compare(const Rational& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat pi(mpfr_prec_t precision);
BigFloat cos(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// Directed-rounding helpers for error bounds.
BigFloat add_up(const BigFloat& a, const BigFloat& b);
BigFloat mul_up(const BigFloat& a, const BigFloat& b);
BigFloat div_up(const BigFloat& a, const BigFloat& b);
BigFloat div_down(const BigFloat& a, const BigFloat& b);
/// 2^e at the given precision.
BigFloat pow2(long e, mpfr_prec_t precision);

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t precision = 128) : re(precision), im(precision) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static BigComplex from_rational(const Rational& r, const Rational& i, mpfr_prec_t precision);

    mpfr_prec_t precision() const { return re.precision(); }
    BigComplex conj() const { return {re, -im}; }
    /// |z| rounded to nearest.
    BigFloat modulus() const;
    /// |z| rounded upward / downward.
    BigFloat modulus_up() const;
    BigFloat modulus_down() const;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigFloat& s);
BigComplex operator-(const BigComplex& a);
/// Principal branch of w^z for real w > 0.
BigComplex pow(const BigFloat& w, const BigComplex& z);
/// Principal square root: sqrt(r) e^{i phi/2} with -pi < phi <= pi.
BigComplex sqrt(const BigComplex& z);

}  // namespace esa
