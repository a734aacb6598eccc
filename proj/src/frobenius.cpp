#include "esa/frobenius.hpp"

#include "esa/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace esa {

namespace {

constexpr mpfr_prec_t kSeriesPrecision = 192;

std::complex<double> to_complex(const BigComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

BigComplex from_complex(std::complex<double> z, mpfr_prec_t p) {
    return BigComplex::from_rational(Rational(z.real()), Rational(z.imag()), p);
}

// Nonnegative integer k with k^2 = K, if any.
std::optional<int> integer_root(const Rational& K) {
    if (K < 0 || K.get_den() != 1) return std::nullopt;
    auto s = exact_sqrt(K);
    if (!s || s->get_den() != 1 || !s->get_num().fits_sint_p()) return std::nullopt;
    return static_cast<int>(s->get_num().get_si());
}

// Rational roots of a K^2 + b K + c.
std::vector<Rational> rational_roots(const Rational& a, const Rational& b, const Rational& c) {
    Rational disc = b * b - 4 * a * c;
    auto s = exact_sqrt(disc);
    if (!s) return {};
    Rational r1 = (-b - *s) / (2 * a), r2 = (-b + *s) / (2 * a);
    if (r1 == r2) return {r1};
    return {r1, r2};
}

std::string relation(Locus locus, Side side, int k) {
    const std::string v = k == 0 ? "0" : "-" + std::to_string(k);
    if (locus == Locus::Line) {
        if (side == Side::Above) return "(alpha1-alpha4)/4=" + v;
        if (side == Side::Pivot) return "alpha1=alpha2, alpha3=alpha4, (alpha1-alpha4)/4=" + v;
        return "(alpha2-alpha3)/4=" + v;
    }
    if (side == Side::Above) return "(alpha1-alpha3)/4=(alpha2-alpha4)/4=" + v;
    if (side == Side::Pivot) return "alpha2=alpha3, (alpha1-alpha3)/4=(alpha2-alpha4)/4=" + v;
    return "(alpha1-alpha2)/4=(alpha3-alpha4)/4=" + v;
}

Side side_of(const Rational& c1, const Rational& pivot) {
    if (c1 > pivot) return Side::Above;
    if (c1 == pivot) return Side::Pivot;
    return Side::Below;
}

bool nonpositive_integer(const BigComplex& p) {
    BigFloat eps = pow2(-(p.precision() / 2), p.precision());
    if (abs(p.im) > eps) return false;
    BigFloat nearest(p.precision());
    mpfr_round(nearest.get(), p.re.get());
    return abs(p.re - nearest) <= eps && nearest.sign() <= 0;
}

// Terms t_k = z^k / ((p1)_k (p2)_k (p3)_k k!); visit(k, t_k) for k = 0..K, where
// the tail after K is certified below tol.
template <typename Visit>
double walk_series(const std::array<BigComplex, 3>& p, const BigComplex& z, double tol, long cap, Visit visit) {
    const mpfr_prec_t prec = z.precision();
    for (const auto& q : p)
        if (nonpositive_integer(q))
            throw ResonanceError("0F3 parameter is a nonpositive integer; use select_fundamental_system");
    BigComplex term = BigComplex::from_rational(1, 0, prec);
    const BigFloat mz = z.modulus_up();
    for (long k = 0;; ++k) {
        visit(k, term);
        BigFloat den(k + 1, prec);
        bool bounded = true;
        for (const auto& q : p) {
            BigFloat m = BigFloat(k, prec) + q.re;
            if (m.sign() <= 0) {
                bounded = false;
                break;
            }
            den = den * m;
        }
        if (bounded) {
            BigFloat rho = div_up(mz, den);
            if (rho.compare(1) < 0) {
                double tail = mul_up(term.modulus_up(), div_up(rho, BigFloat(1, prec) - rho)).to_double();
                if (tail <= tol) return tail;
            }
        }
        if (k + 1 > cap) throw std::runtime_error("0F3: term cap reached before the tail bound");
        BigComplex d = BigComplex::from_rational(k + 1, 0, prec);
        for (const auto& q : p) d = d * (q + BigComplex::from_rational(k, 0, prec));
        term = term * z / d;
    }
}

std::array<BigComplex, 4> alphas(const Rational& c1, const Rational& c2) {
    return quartic_roots_closed_form({c1, c2}, 256).alpha;
}

SolutionDescriptor series(int j, const std::array<BigComplex, 4>& a) {
    SolutionDescriptor d;
    d.kind = SolutionKind::SeriesF03;
    d.exponent = j;
    d.exponent_value = to_complex(a[static_cast<std::size_t>(j - 1)]);
    for (int i = 1; i <= 4; ++i) {
        if (i == j) continue;
        d.order.push_back(i);
        BigComplex q = BigComplex::from_rational(1, 0, 256) +
                       (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(i - 1)]) * BigFloat(Rational(1, 4), 256);
        d.parameters.push_back(to_complex(q));
    }
    return d;
}

SolutionDescriptor meijer(SolutionKind kind, std::vector<int> order, const std::array<BigComplex, 4>& a, int sign = 1) {
    SolutionDescriptor d;
    d.kind = kind;
    d.order = std::move(order);
    d.argument_sign = sign;
    for (int i : d.order) d.parameters.push_back(to_complex(a[static_cast<std::size_t>(i - 1)]) / 4.0);
    return d;
}

// Complex residual of one series member, summed term by term.
BigComplex member_residual(const Rational& c1, const Rational& c2, const std::array<BigComplex, 4>& a, int j,
                           const BigComplex& lambda, const BigFloat& r, double tol) {
    const mpfr_prec_t prec = kSeriesPrecision;
    const BigComplex& alpha = a[static_cast<std::size_t>(j - 1)];
    std::array<BigComplex, 3> p{BigComplex(prec), BigComplex(prec), BigComplex(prec)};
    std::size_t idx = 0;
    for (int i = 1; i <= 4; ++i) {
        if (i == j) continue;
        p[idx++] = BigComplex::from_rational(1, 0, prec) +
                   (alpha - a[static_cast<std::size_t>(i - 1)]) * BigFloat(Rational(1, 4), prec);
    }
    const BigFloat r4 = r * r * r * r;
    BigComplex z = lambda * (r4 * BigFloat(Rational(1, 256), prec));
    const BigComplex c1b = BigComplex::from_rational(c1, 0, prec), c2b = BigComplex::from_rational(c2, 0, prec);
    auto d2 = [&](const BigComplex& w) {
        BigComplex one = BigComplex::from_rational(1, 0, prec), two = BigComplex::from_rational(2, 0, prec),
                   three = BigComplex::from_rational(3, 0, prec);
        BigComplex w1 = w - one, w2 = w - two, w3 = w - three;
        return w * w1 * w2 * w3 + c1b * (w * w1 + w2 * w3) + c2b;
    };
    const BigComplex ra = pow(r, alpha);
    const BigComplex ra4 = ra * (BigFloat(1, prec) / r4);
    BigComplex sum(prec);
    // t_k r^{4k} (D2(alpha+4k) r^{alpha-4} - lambda r^alpha)
    walk_series(p, z, tol, 1000000, [&](long k, const BigComplex& t) {
        BigComplex w = alpha + BigComplex::from_rational(4 * k, 0, prec);
        sum = sum + t * (d2(w) * ra4 - lambda * ra);
    });
    return sum;
}

}  // namespace

std::vector<int> ResonanceClassification::lines() const {
    std::vector<int> out;
    for (const auto& m : memberships)
        if (m.locus == Locus::Line) out.push_back(m.k);
    return out;
}

std::vector<int> ResonanceClassification::parabolas() const {
    std::vector<int> out;
    for (const auto& m : memberships)
        if (m.locus == Locus::Parabola) out.push_back(m.k);
    return out;
}

ResonanceClassification classify_resonance(const Rational& c1, const Rational& c2, int k_max) {
    ResonanceClassification out;
    out.c1 = c1;
    out.c2 = c2;
    auto add = [&](Locus locus, const std::vector<Rational>& ks) {
        std::vector<int> found;
        for (const auto& K : ks)
            if (auto k = integer_root(K); k && *k <= k_max) found.push_back(*k);
        std::sort(found.begin(), found.end());
        for (int k : found) {
            const long kk = static_cast<long>(k) * k;
            Rational pivot = Rational(5, 4) - (locus == Locus::Line ? 4 : 8) * Rational(kk);
            Side s = side_of(c1, pivot);
            out.memberships.push_back({locus, k, s, relation(locus, s, k)});
        }
    };
    // In K = k^2 both loci are quadratic.
    add(Locus::Line, rational_roots(256, 128 * c1 - 160, 16 * c2 + 9 + 24 * c1));
    add(Locus::Parabola, rational_roots(64, 16 * c1 - 20, 1 - 4 * c1 + c1 * c1 - c2));
    return out;
}

std::string to_string(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::SeriesF03:
            return "0F3";
        case SolutionKind::MeijerG20:
            return "G20";
        case SolutionKind::MeijerG30:
            return "G30";
        case SolutionKind::MeijerG40:
            return "G40";
    }
    return "0F3";
}

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Generic:
            return "Generic";
        case CaseTag::A3a_upper:
            return "A3a_upper";
        case CaseTag::A3a_lower:
            return "A3a_lower";
        case CaseTag::A3b_upper:
            return "A3b_upper";
        case CaseTag::A3b_lower:
            return "A3b_lower";
        case CaseTag::A3c:
            return "A3c";
        case CaseTag::A3d:
            return "A3d";
        case CaseTag::NotCovered:
            return "NotCovered";
    }
    return "NotCovered";
}

BasisSelection select_fundamental_system(const Rational& c1, const Rational& c2, std::complex<double> lambda) {
    BasisSelection sel;
    sel.classification = classify_resonance(c1, c2);
    sel.lambda = lambda;
    auto a = alphas(c1, c2);
    for (std::size_t i = 0; i < 4; ++i) sel.alpha[i] = to_complex(a[i]);

    const auto& mem = sel.classification.memberships;
    const std::size_t lines = sel.classification.lines().size();
    const std::size_t parabolas = sel.classification.parabolas().size();
    const auto G20 = SolutionKind::MeijerG20;
    auto& s = sel.solutions;
    if (mem.empty()) {
        sel.tag = CaseTag::Generic;
        s = {series(1, a), series(2, a), series(3, a), series(4, a)};
    } else if (lines >= 1 && parabolas >= 1) {
        sel.tag = CaseTag::A3d;
        s = {meijer(SolutionKind::MeijerG40, {1, 2, 3, 4}, a), meijer(SolutionKind::MeijerG30, {2, 3, 4, 1}, a, -1),
             meijer(G20, {3, 4, 1, 2}, a), series(4, a)};
    } else if (lines == 2) {
        sel.tag = CaseTag::A3c;
        s = {meijer(G20, {1, 4, 2, 3}, a), meijer(G20, {2, 3, 1, 4}, a), series(3, a), series(4, a)};
    } else if (lines == 1 && mem.front().side == Side::Above) {
        sel.tag = CaseTag::A3a_upper;
        s = {meijer(G20, {1, 4, 2, 3}, a), series(2, a), series(3, a), series(4, a)};
    } else if (lines == 1 && mem.front().side == Side::Below) {
        sel.tag = CaseTag::A3a_lower;
        s = {series(1, a), meijer(G20, {2, 3, 1, 4}, a), series(3, a), series(4, a)};
    } else if (parabolas == 1 && mem.front().side == Side::Above) {
        sel.tag = CaseTag::A3b_upper;
        s = {meijer(G20, {1, 3, 2, 4}, a), meijer(G20, {2, 4, 1, 3}, a), series(3, a), series(4, a)};
    } else if (parabolas == 1 && mem.front().side == Side::Below) {
        sel.tag = CaseTag::A3b_lower;
        s = {meijer(G20, {1, 2, 3, 4}, a), series(2, a), meijer(G20, {3, 4, 1, 2}, a), series(4, a)};
    } else {
        sel.tag = CaseTag::NotCovered;
    }
    return sel;
}

SeriesValue eval_0F3(const std::array<std::complex<double>, 3>& p, std::complex<double> z, double tol, long term_cap) {
    const mpfr_prec_t prec = kSeriesPrecision;
    std::array<BigComplex, 3> bp{from_complex(p[0], prec), from_complex(p[1], prec), from_complex(p[2], prec)};
    BigComplex sum(prec);
    long terms = 0;
    double tail = walk_series(bp, from_complex(z, prec), tol, term_cap, [&](long k, const BigComplex& t) {
        sum = sum + t;
        terms = k + 1;
    });
    return {to_complex(sum), terms, tail};
}

double ode_residual_combination(const BasisSelection& sel, const std::vector<std::complex<double>>& coeffs,
                                std::complex<double> lambda, double r, double tol) {
    if (r <= 0) throw std::invalid_argument("ode_residual: r must be positive");
    if (coeffs.size() != sel.solutions.size()) throw std::invalid_argument("ode_residual: one coefficient per member");
    const mpfr_prec_t prec = kSeriesPrecision;
    auto a = alphas(sel.classification.c1, sel.classification.c2);
    BigComplex lam = from_complex(lambda, prec);
    BigFloat rb(Rational(r), prec);
    BigComplex total(prec);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == std::complex<double>(0, 0)) continue;
        const auto& d = sel.solutions[i];
        if (d.kind != SolutionKind::SeriesF03)
            throw std::invalid_argument("ode_residual: Meijer G members are not evaluated");
        total = total + from_complex(coeffs[i], prec) *
                            member_residual(sel.classification.c1, sel.classification.c2, a, d.exponent, lam, rb, tol);
    }
    return total.modulus().to_double();
}

double ode_residual(const BasisSelection& sel, int index, std::complex<double> lambda, double r, double tol) {
    if (index < 0 || static_cast<std::size_t>(index) >= sel.solutions.size())
        throw std::invalid_argument("ode_residual: no such member");
    std::vector<std::complex<double>> coeffs(sel.solutions.size());
    coeffs[static_cast<std::size_t>(index)] = 1;
    return ode_residual_combination(sel, coeffs, lambda, r, tol);
}

bool GeometryReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const GeometryCheck& c) { return c.holds; });
}

GeometryReport resonance_geometry_table(int h_max, int k_max) {
    GeometryReport rep;
    // L_k: c2 = la + lb c1;  P_k: c2 = c1^2 + pb c1 + pa.
    auto la = [](int k) {
        Rational K = static_cast<long>(k) * k;
        return Rational((-9 + 160 * K - 256 * K * K) / 16);
    };
    auto lb = [](int k) {
        Rational K = static_cast<long>(k) * k;
        return Rational((-24 - 128 * K) / 16);
    };
    auto pa = [](int k) {
        Rational K = static_cast<long>(k) * k;
        return Rational(1 - 20 * K + 64 * K * K);
    };
    auto pb = [](int k) {
        Rational K = static_cast<long>(k) * k;
        return Rational(-4 + 16 * K);
    };
    const int top = std::max(h_max, k_max);
    for (int k = 0; k <= top; ++k) {
        // c1^2 + (pb - lb) c1 + (pa - la) = 0 must have a double root.
        Rational b = pb(0) - lb(k), c = pa(0) - la(k);
        rep.checks.push_back({"L_k tangent to P_0", 0, k, b * b - 4 * c == 0});
        b = pb(k) - lb(0);
        c = pa(k) - la(0);
        rep.checks.push_back({"P_k tangent to L_0", 0, k, b * b - 4 * c == 0});
    }
    for (int h = 0; h <= h_max; ++h)
        for (int k = 0; k <= k_max; ++k) {
            const Rational H = static_cast<long>(h) * h, K = static_cast<long>(k) * k;
            if (h != k) {
                Rational x = (la(k) - la(h)) / (lb(h) - lb(k));
                rep.checks.push_back({"L_h cap L_k", h, k, x == Rational(5, 4) - 2 * H - 2 * K});
                Rational y = (pa(k) - pa(h)) / (pb(h) - pb(k));
                rep.checks.push_back({"P_h cap P_k", h, k, y == Rational(5, 4) - 4 * H - 4 * K});
                // c1^2 + (pb_k - lb_h) c1 + (pa_k - la_h) = (c1 - r+)(c1 - r-)
                const Rational hk = static_cast<long>(h) * k;
                Rational rp = Rational(5, 4) - 4 * H + 8 * hk - 8 * K, rm = Rational(5, 4) - 4 * H - 8 * hk - 8 * K;
                bool ok = pb(k) - lb(h) == -(rp + rm) && pa(k) - la(h) == rp * rm;
                rep.checks.push_back({"L_h cap P_k", h, k, ok});
            }
        }
    return rep;
}

std::vector<LocusSample> figure2_data() {
    std::vector<LocusSample> out;
    for (int step = 0; step <= 160; ++step) {
        Rational c1 = Rational(-30) + ratio(step, 4);
        for (int k = 0; k <= 5; ++k) {
            Rational c2 = line_c2(c1, k);
            out.push_back({"line", k, c1, c2, euler_esa_closed_form({c1, c2})});
        }
        for (int k = 0; k <= 3; ++k) {
            Rational c2 = parabola_c2(c1, k);
            out.push_back({"parabola", k, c1, c2, euler_esa_closed_form({c1, c2})});
        }
    }
    for (int i = 0; i <= 40; ++i)
        for (int j = 0; j <= 40; ++j) {
            Rational c1 = Rational(-30) + i, c2 = Rational(-100) + 10 * j;
            out.push_back({"region", -1, c1, c2, euler_esa_closed_form({c1, c2})});
        }
    return out;
}

}  // namespace esa
