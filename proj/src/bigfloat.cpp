#include "esa/bigfloat.hpp"

#include <algorithm>
#include <utility>

namespace esa {

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(v_, precision);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t precision, mpfr_rnd_t rnd) {
    mpfr_init2(v_, precision);
    mpfr_set_q(v_, q.get_mpq_t(), rnd);
}

BigFloat::BigFloat(long v, mpfr_prec_t precision) {
    mpfr_init2(v_, precision);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

Rational BigFloat::to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

std::string BigFloat::to_string(int digits) const {
    if (mpfr_zero_p(v_)) return "0";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

namespace {

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

template <typename Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op, mpfr_rnd_t rnd = MPFR_RNDN) {
    BigFloat r(joint(a, b));
    op(r.get(), a.get(), b.get(), rnd);
    return r;
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat pi(mpfr_prec_t precision) {
    BigFloat r(precision);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_cos(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sin(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_exp(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_log(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) { return binary(y, x, mpfr_atan2); }

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat add_up(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add, MPFR_RNDU); }
BigFloat mul_up(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul, MPFR_RNDU); }
BigFloat div_up(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div, MPFR_RNDU); }
BigFloat div_down(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div, MPFR_RNDD); }

BigFloat pow2(long e, mpfr_prec_t precision) {
    BigFloat r(precision);
    mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
    return r;
}

BigComplex BigComplex::from_rational(const Rational& r, const Rational& i, mpfr_prec_t precision) {
    return {BigFloat(r, precision), BigFloat(i, precision)};
}

BigFloat BigComplex::modulus() const {
    BigFloat r(precision());
    mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
    return r;
}

BigFloat BigComplex::modulus_up() const {
    BigFloat r(precision());
    mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDU);
    return r;
}

BigFloat BigComplex::modulus_down() const {
    BigFloat r(precision());
    mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDD);
    return r;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

BigComplex pow(const BigFloat& w, const BigComplex& z) {
    BigFloat lw = log(w);
    BigFloat mag = exp(z.re * lw);
    BigFloat arg = z.im * lw;
    return {mag * cos(arg), mag * sin(arg)};
}

BigComplex sqrt(const BigComplex& z) {
    const mpfr_prec_t p = z.precision();
    if (z.re.is_zero() && z.im.is_zero()) return BigComplex(p);
    BigFloat two(2, p);
    BigFloat m = z.modulus();
    if (z.re.sign() >= 0) {
        BigFloat t = sqrt((m + z.re) / two);
        return {t, z.im / (two * t)};
    }
    BigFloat t = sqrt((m - z.re) / two);
    BigFloat real = abs(z.im) / (two * t);
    // phi = pi on the negative real axis, so the root lies on +i.
    return {real, z.im.sign() < 0 ? -t : t};
}

}  // namespace esa
