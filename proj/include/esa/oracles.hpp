#pragma once

#include "esa/indicial.hpp"
#include "esa/region.hpp"

#include <array>
#include <string>
#include <vector>

namespace esa {

/// Closed-form ESA test for D_2(c1, c2; .): c2 >= 45 + 12c1 + c1^2 when
/// c1 >= -11/4, c2 >= -105/16 - 19c1/2 otherwise.
bool euler_esa_closed_form(const EulerParams& p);

/// gamma for m = 1, 2 as functions of N = n + 2l.
Rational gamma1_closed_form(int N);
Rational gamma2_closed_form(int N);
/// gamma_{3,n,0}; algebraic of degree 2 for 2 <= n <= 9.
AlgebraicReal gamma3_closed_form(int n);

struct OracleRegion {
    bool available = false;
    IntervalSet set;
    std::string formula;
};
/// Full-operator region for m <= 3 or (m, n) = (5, 20).
OracleRegion oracle_region(int m, int n);
/// Radial region for m <= 2 (depends on n + 2l only).
OracleRegion oracle_region_radial(int m, int n, int l);

/// Q_{5,20,0} as displayed, primitive with leading coefficient 3125.
Polynomial quartic_520();
/// beta < gamma, the real roots of quartic_520.
std::array<AlgebraicReal, 2> beta_gamma_520();

/// gamma_{2,n,0} for n = 2..12.
std::vector<Rational> table1_golden();
/// Sign strings of Disc, Pi, Lambda of Q_{5,20,l}, one character per l = 0..30.
std::array<std::string, 3> table2_golden();

/// -764411904 (3k^2+60k+52)^2 (15k^2+300k+476)
Rational disc_q3_closed_form(const Rational& k);
/// 2^41 3^4 5^15 times the degree-10 expansion in k = l - 29.
Rational pi520_closed_form(int l);

/// L_k: c2 = (-9 - 24c1 - 128c1k^2 + 160k^2 - 256k^4)/16.
Rational line_c2(const Rational& c1, int k);
/// P_k: c2 = 1 - 4c1 + c1^2 + 16c1k^2 - 20k^2 + 64k^4.
Rational parabola_c2(const Rational& c1, int k);

}  // namespace esa
