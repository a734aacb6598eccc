#include "esa/oracles.hpp"

#include "esa/real_roots.hpp"

#include <stdexcept>

namespace esa {

bool euler_esa_closed_form(const EulerParams& p) {
    const Rational& c1 = p.c1;
    const Rational& c2 = p.c2;
    if (c1 >= Rational(-11, 4)) return c2 >= 45 + 12 * c1 + c1 * c1;
    return c2 >= Rational(-105, 16) - Rational(19, 2) * c1;
}

Rational gamma1_closed_form(int N) { return ratio(-static_cast<long>(N) * (N - 4), 4); }

Rational gamma2_closed_form(int N) {
    const long n = N;
    if ((n - 1) * (n - 3) <= 11) return Rational(-3 * (n + 2) * (n - 6));
    return ratio(-(n + 4) * n * (n - 4) * (n - 8), 16);
}

AlgebraicReal gamma3_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("gamma3_closed_form: n must be >= 2");
    const long k = n;
    if (k >= 10) return AlgebraicReal::from_rational(ratio(-(k + 8) * (k + 4) * k * (k - 4) * (k - 8) * (k - 12), 64));
    const Rational s(64, 27);
    const Rational a = s * (7112 + 504 * k - 126 * k * k);
    const Rational b = s * (236 + 12 * k - 3 * k * k);
    const Rational c = 964 + 60 * k - 15 * k * k;
    // (x - a)^2 = b^2 c, root on the side of sign(b)
    Polynomial def({a * a - b * b * c, -2 * a, Rational(1)});
    auto roots = sturm_isolate(def);
    const IsolatedRoot& r = b > 0 ? roots.back() : roots.front();
    AlgebraicReal x = r.value();
    if (auto q = x.as_rational()) return AlgebraicReal::from_rational(*q);
    return x;
}

Polynomial quartic_520() {
    return Polynomial::from_integers({"629847004905001626921946285352115240960000",
                                      "1045471534388841527438982355353600", "429438995162964368031744",
                                      "-83914629120000", "3125"});
}

std::array<AlgebraicReal, 2> beta_gamma_520() {
    auto roots = sturm_isolate(quartic_520());
    if (roots.size() != 2) throw std::logic_error("quartic_520: expected two real roots");
    return {roots[0].value(), roots[1].value()};
}

namespace {

IntervalSet from_threshold(const AlgebraicReal& g) { return {{{Endpoint::at(g), Endpoint::pos_inf()}}}; }
IntervalSet from_threshold(const Rational& g) { return from_threshold(AlgebraicReal::from_rational(g)); }

}  // namespace

OracleRegion oracle_region(int m, int n) {
    OracleRegion out;
    if (n < 2) return out;
    if (m == 1) {
        out = {true, from_threshold(gamma1_closed_form(n)), "c >= -n(n-4)/4"};
    } else if (m == 2) {
        out = {true, from_threshold(gamma2_closed_form(n)),
               n <= 5 ? "c >= 3(n+2)(6-n)" : "c >= -n(n+4)(n-4)(n-8)/16"};
    } else if (m == 3) {
        out = {true, from_threshold(gamma3_closed_form(n)),
               n <= 9 ? "c >= (64/27)(7112+504n-126n^2+(236+12n-3n^2)sqrt(964+60n-15n^2))"
                      : "c >= -(n+8)(n+4)n(n-4)(n-8)(n-12)/64"};
    } else if (m == 5 && n == 20) {
        auto bg = beta_gamma_520();
        out.available = true;
        out.set.pieces.push_back({Endpoint::at(Rational(0)), Endpoint::at(bg[0])});
        out.set.pieces.push_back({Endpoint::at(bg[1]), Endpoint::pos_inf()});
        out.formula = "c in [0, beta] u [gamma, inf), beta < gamma the real roots of Q_{5,20,0}";
    }
    return out;
}

OracleRegion oracle_region_radial(int m, int n, int l) {
    const int N = n + 2 * l;
    if (m == 1) return {true, from_threshold(gamma1_closed_form(N)), "c >= -N(N-4)/4"};
    if (m == 2) {
        const long a = static_cast<long>(N - 1) * (N - 3);
        return {true, from_threshold(gamma2_closed_form(N)),
                a <= 11 ? "c >= -3(N+2)(N-6)" : "c >= -(N+4)N(N-4)(N-8)/16"};
    }
    return {};
}

std::vector<Rational> table1_golden() {
    return {48, 45, 36, 21, 15, Rational(231, 16), 0, Rational(-585, 16), -105, Rational(-3465, 16), -384};
}

std::array<std::string, 3> table2_golden() {
    return {"-++++++++++++++++++++++++++++++", "--+++++++--------------------++",
            "-++----++++++++++++++++++++++++"};
}

Rational disc_q3_closed_form(const Rational& k) {
    Rational a = 3 * k * k + 60 * k + 52;
    Rational b = 15 * k * k + 300 * k + 476;
    return Rational(-764411904) * a * a * b;
}

Rational pi520_closed_form(int l) {
    static const Polynomial expansion = Polynomial::from_integers(
        {"32928178597910728704", "42256876792510195200", "9364063767203524800", "974749919610039200",
         "59262332963402100", "2291590504307500", "58206830051875", "969468160000", "10201465000", "61512500",
         "161875"});
    Integer prefactor;
    mpz_ui_pow_ui(prefactor.get_mpz_t(), 2, 41);
    prefactor *= 81;
    Integer five;
    mpz_ui_pow_ui(five.get_mpz_t(), 5, 15);
    prefactor *= five;
    return Rational(prefactor) * expansion(Rational(l - 29));
}

Rational line_c2(const Rational& c1, int k) {
    const Rational K = static_cast<long>(k) * k;
    return (-9 - 24 * c1 - 128 * c1 * K + 160 * K - 256 * K * K) / 16;
}

Rational parabola_c2(const Rational& c1, int k) {
    const Rational K = static_cast<long>(k) * k;
    return 1 - 4 * c1 + c1 * c1 + 16 * c1 * K - 20 * K + 64 * K * K;
}

}  // namespace esa
