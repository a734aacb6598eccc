#include "esa/rational.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace esa {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Integer pow10(unsigned k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational");

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed fraction: " + std::string(text));
        Integer d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator: " + std::string(text));
        value = Rational(Integer(std::string(num)), d);
        value.canonicalize();
    } else {
        std::string_view mantissa = body;
        long exponent = 0;
        if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = body.substr(0, e);
            auto exp_text = body.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6) throw ParseError("malformed exponent: " + std::string(text));
            exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
            if (exp_negative) exponent = -exponent;
        }
        std::string digits;
        long fraction_digits = 0;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            auto whole = mantissa.substr(0, dot);
            auto frac = mantissa.substr(dot + 1);
            if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
                (whole.empty() && frac.empty()))
                throw ParseError("malformed decimal: " + std::string(text));
            digits = std::string(whole) + std::string(frac);
            fraction_digits = static_cast<long>(frac.size());
        } else {
            if (!all_digits(mantissa)) throw ParseError("malformed number: " + std::string(text));
            digits = std::string(mantissa);
        }
        long shift = exponent - fraction_digits;
        Integer n(digits);
        if (shift >= 0) {
            value = Rational(n * pow10(static_cast<unsigned>(shift)));
        } else {
            value = Rational(n, pow10(static_cast<unsigned>(-shift)));
            value.canonicalize();
        }
    }
    return negative ? Rational(-value) : value;
}

Rational ratio(long num, long den) {
    if (den == 0) throw std::domain_error("ratio: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
    if (q == 0) return "0";
    if (q.get_den() == 1 && q.get_num().get_str().size() <= static_cast<std::size_t>(digits) + 1)
        return q.get_num().get_str();
    mpf_class f(q, 64 + 4 * static_cast<mp_bitcnt_t>(digits));
    mp_exp_t exp10 = 0;
    std::string mant = f.get_str(exp10, 10, static_cast<std::size_t>(digits));
    bool neg = !mant.empty() && mant.front() == '-';
    if (neg) mant.erase(mant.begin());
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    long e = static_cast<long>(exp10) - 1;  // value = 0.mant * 10^exp10
    std::string out = neg ? "-" : "";
    if (e >= -4 && e < 6) {
        if (e >= 0) {
            std::string whole = mant.substr(0, std::min<std::size_t>(mant.size(), e + 1));
            while (whole.size() < static_cast<std::size_t>(e + 1)) whole.push_back('0');
            std::string frac = mant.size() > static_cast<std::size_t>(e + 1) ? mant.substr(e + 1) : "";
            out += whole;
            if (!frac.empty()) out += "." + frac;
        } else {
            out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mant;
        }
        return out;
    }
    out += mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(e);
    return out;
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational pow(const Rational& base, unsigned exponent) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_between: empty interval");
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return -simplest_between(-hi, -lo);
    // 0 < lo <= hi: continued-fraction descent.
    Integer fl = floor(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational lo_frac = lo - fl;
    Rational hi_frac = hi - fl;
    // 1/x lies in [1/hi_frac, 1/lo_frac]
    Rational inner = simplest_between(1 / hi_frac, 1 / lo_frac);
    return Rational(fl) + 1 / inner;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
        return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational midpoint(const Rational& lo, const Rational& hi) {
    Rational m = (lo + hi) / 2;
    return m;
}

}  // namespace esa
