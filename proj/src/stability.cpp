#include "esa/stability.hpp"

#include <stdexcept>

namespace esa {

namespace {

// b_k = coefficient of z^{d-k}
Rational hurwitz_coeff(const Polynomial& p, int k) {
    const int d = p.degree();
    if (k < 0 || k > d) return 0;
    return p.coeff(d - k);
}

}  // namespace

RationalMatrix hurwitz_matrix(const Polynomial& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("hurwitz_matrix: degree must be at least 1");
    RationalMatrix h(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = hurwitz_coeff(p, 2 * j - i);
    return h;
}

PolynomialMatrix hurwitz_matrix_in_constant(const Polynomial& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("hurwitz_matrix_in_constant: degree must be at least 1");
    PolynomialMatrix h(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            const int k = 2 * j - i;
            Polynomial e = Polynomial::constant(hurwitz_coeff(p, k));
            if (k == d) e += Polynomial::monomial(1, 1);
            h(i - 1, j - 1) = e;
        }
    return h;
}

HurwitzData hurwitz_assemble(int m, int n, int l) {
    IndicialSpec spec{m, n, l, 0};
    spec.validate();
    HurwitzData h;
    h.m = m;
    h.n = n;
    h.l = l;
    Polynomial d0 = build_indicial(spec);
    h.shifted = d0.shifted(Rational(-1, 2));
    h.matrix = hurwitz_matrix_in_constant(h.shifted);
    h.det_in_c = polymatrix_det(h.matrix);
    h.linear_root = -d0(Rational(-1, 2));
    if (h.det_in_c(h.linear_root) != 0) throw std::logic_error("hurwitz_assemble: linear factor does not divide det H");
    h.q_factor = exact_quotient(h.det_in_c, Polynomial::linear_factor(h.linear_root));
    return h;
}

int AxisRoots::count() const {
    int c = 0;
    for (const auto& r : t_values) c += r.multiplicity;
    return c;
}

AxisRoots axis_roots_exact(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("axis_roots_exact: zero polynomial");
    Polynomial s = p.shifted(Rational(-1, 2));
    // s(i t) = P(t) + i Q(t)
    std::vector<Rational> re(static_cast<std::size_t>(s.degree()) + 1), im(re.size());
    for (int k = 0; k <= s.degree(); ++k) {
        const Rational& a = s.coeffs()[static_cast<std::size_t>(k)];
        const bool neg = (k / 2) % 2 == 1;
        if (k % 2 == 0)
            re[static_cast<std::size_t>(k)] = neg ? Rational(-a) : a;
        else
            im[static_cast<std::size_t>(k)] = neg ? Rational(-a) : a;
    }
    AxisRoots out;
    out.common = gcd(Polynomial(re), Polynomial(im));
    if (out.common.degree() > 0) out.t_values = sturm_isolate(out.common);
    return out;
}

HalfPlaneCount halfplane_count(const Polynomial& p, const std::vector<mpfr_prec_t>& ladder, mpfr_prec_t max_bits) {
    if (p.degree() < 1) throw std::domain_error("halfplane_count: constant polynomial");
    HalfPlaneCount total;
    for (const auto& [f, mult] : square_free_decomposition(p)) {
        Polynomial s = f.shifted(Rational(-1, 2));
        Polynomial sym = gcd(s, s.reflected());
        Polynomial rest = s;
        if (sym.degree() > 0) {
            const int axis = axis_roots_exact(f).count();
            const int paired = sym.degree() - axis;
            if (paired % 2 != 0) throw std::logic_error("halfplane_count: unpaired symmetric root");
            total.axis += axis * mult;
            total.left += paired / 2 * mult;
            total.right += paired / 2 * mult;
            rest = exact_quotient(s, sym);
        }
        if (rest.degree() < 1) continue;
        std::vector<mpfr_prec_t> steps = ladder;
        if (steps.empty()) steps.push_back(128);
        while (steps.back() < max_bits) steps.push_back(steps.back() * 2);
        bool done = false;
        for (mpfr_prec_t prec : steps) {
            if (prec > max_bits) break;
            auto set = certified_roots(rest, prec, max_bits);
            auto pos = real_part_position(set, Rational(0));
            if (!pos) continue;
            total.left += pos->left * mult;
            total.right += pos->right * mult;
            total.precision = std::max(total.precision, set.precision);
            done = true;
            break;
        }
        if (!done)
            throw PrecisionExhausted("halfplane_count: roots of " + rest.to_string("w") + " not separated from the line at " +
                                     std::to_string(max_bits) + " bits");
    }
    return total;
}

std::string to_string(RealRootClass c) {
    switch (c) {
        case RealRootClass::TwoRealTwoImaginary: return "TwoRealTwoImaginary";
        case RealRootClass::NoRealRoots: return "NoRealRoots";
        case RealRootClass::FourReal: return "FourReal";
        case RealRootClass::Other: return "Other";
    }
    return "Other";
}

QuarticInvariants quartic_classify(const Polynomial& q) {
    if (q.degree() != 4) throw std::invalid_argument("quartic_classify: degree must be 4");
    const Rational a = q.coeff(4), b = q.coeff(3), c = q.coeff(2), d = q.coeff(1), e = q.coeff(0);
    QuarticInvariants inv;
    inv.disc = discriminant(q);
    inv.pi = 8 * a * c - 3 * b * b;
    inv.lambda = 64 * a * a * a * e - 16 * a * a * b * d - 16 * a * a * c * c + 16 * a * b * b * c - 3 * b * b * b * b;
    inv.real_roots = SturmChain(q).count_all();
    if (inv.disc < 0) {
        inv.real_root_class = RealRootClass::TwoRealTwoImaginary;
        inv.by_rule = true;
    } else if (inv.disc > 0 && (inv.pi >= 0 || inv.lambda >= 0)) {
        inv.real_root_class = RealRootClass::NoRealRoots;
        inv.by_rule = true;
    } else if (inv.disc == 0) {
        inv.real_root_class = RealRootClass::Other;
    } else {
        inv.real_root_class = inv.real_roots == 4 ? RealRootClass::FourReal : RealRootClass::Other;
    }
    return inv;
}

Rational disc_q3(int n, int l) {
    HurwitzData h = hurwitz_assemble(3, n, l);
    return discriminant(h.q_factor);
}

}  // namespace esa
