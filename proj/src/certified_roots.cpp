#include "esa/certified_roots.hpp"

#include <algorithm>
#include <string>

namespace esa {

std::vector<double> OrderedRootSet::real_parts() const {
    std::vector<double> out;
    for (const auto& r : roots)
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.center.re.to_double());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Evaluation {
    BigComplex value;
    BigComplex derivative;
    BigFloat abs_sum;  // sum |a_k| |z|^k, for the rounding bound
};

Evaluation horner(const std::vector<BigFloat>& a, const BigComplex& z) {
    const mpfr_prec_t p = z.precision();
    BigComplex v(p), dv(p);
    BigFloat s(p);
    BigFloat mz = z.modulus_up();
    for (std::size_t k = a.size(); k-- > 0;) {
        dv = dv * z + v;
        v = v * z;
        v.re += a[k];
        s = add_up(mul_up(s, mz), abs(a[k]));
    }
    return {v, dv, s};
}

// Weierstrass inclusion radii: each connected component of the union of the
// disks D(z_i, d |p(z_i)| / |a_d prod (z_i - z_j)|) holding k disks holds k
// roots. Rounding is absorbed into the upper bounds.
std::vector<BigFloat> inclusion_radii(const std::vector<BigFloat>& a, const std::vector<BigComplex>& z) {
    const std::size_t d = z.size();
    const mpfr_prec_t p = z.front().precision();
    const long dl = static_cast<long>(d);
    BigFloat u = pow2(-(p - 1), p);
    BigFloat horner_slack = mul_up(BigFloat(8 * (dl + 2), p), u);
    BigFloat product_slack = BigFloat(1, p) - mul_up(BigFloat(8 * (dl + 2), p), u);
    BigFloat lead = mul_up(abs(a.back()), BigFloat(1, p) - u);
    std::vector<BigFloat> radii;
    radii.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Evaluation e = horner(a, z[i]);
        BigFloat num = add_up(e.value.modulus_up(), mul_up(e.abs_sum, horner_slack));
        BigComplex prod = BigComplex::from_rational(1, 0, p);
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) prod = prod * (z[i] - z[j]);
        BigFloat den = prod.modulus_down() * lead * product_slack;
        if (den.sign() <= 0) {
            radii.emplace_back(pow2(1L << 20, p));
            continue;
        }
        radii.push_back(mul_up(div_up(num, den), BigFloat(dl, p)));
    }
    return radii;
}

bool disjoint(const BigComplex& a, const BigFloat& ra, const BigComplex& b, const BigFloat& rb) {
    return (a - b).modulus_down() > add_up(ra, rb);
}

BigFloat fujiwara_bound(const std::vector<BigFloat>& a) {
    const mpfr_prec_t p = a.front().precision();
    const std::size_t d = a.size() - 1;
    BigFloat best(p);
    for (std::size_t k = 0; k < d; ++k) {
        if (a[k].is_zero()) continue;
        BigFloat ratio = abs(a[k] / a[d]);
        if (k == 0) ratio = ratio / BigFloat(2, p);
        BigFloat root(p);
        mpfr_rootn_ui(root.get(), ratio.get(), static_cast<unsigned long>(d - k), MPFR_RNDU);
        best = max(best, root);
    }
    return best * BigFloat(2, p);
}

std::vector<BigComplex> initial_points(const std::vector<BigFloat>& a) {
    const mpfr_prec_t p = a.front().precision();
    const std::size_t d = a.size() - 1;
    BigFloat radius = fujiwara_bound(a);
    if (radius.is_zero()) radius = BigFloat(1, p);
    BigFloat two_pi = pi(p) * BigFloat(2, p);
    std::vector<BigComplex> z;
    for (std::size_t k = 0; k < d; ++k) {
        BigFloat angle = two_pi * BigFloat(Rational(static_cast<long>(k)) / static_cast<long>(d), p) + BigFloat(Rational(2, 5), p);
        z.emplace_back(radius * cos(angle), radius * sin(angle));
    }
    return z;
}

// Aberth-Ehrlich simultaneous iteration, in place.
void aberth(const std::vector<BigFloat>& a, std::vector<BigComplex>& z) {
    const std::size_t d = z.size();
    const mpfr_prec_t p = z.front().precision();
    BigFloat tol = pow2(-(p - 6), p);
    BigFloat stall = pow2(-(p / 2), p);
    const int max_iter = 100 * static_cast<int>(d) + 400;
    std::vector<bool> done(d, false);
    std::vector<BigFloat> last(d, BigFloat(p));
    std::size_t remaining = d;
    for (int it = 0; it < max_iter && remaining > 0; ++it) {
        for (std::size_t i = 0; i < d; ++i) {
            if (done[i]) continue;
            Evaluation e = horner(a, z[i]);
            if (e.value.re.is_zero() && e.value.im.is_zero()) {
                done[i] = true;
                --remaining;
                continue;
            }
            if (e.derivative.re.is_zero() && e.derivative.im.is_zero()) {
                z[i].re += pow2(-(p / 4), p);
                continue;
            }
            BigComplex newton = e.value / e.derivative;
            BigComplex sum(p);
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                BigComplex diff = z[i] - z[j];
                if (diff.re.is_zero() && diff.im.is_zero()) continue;
                sum = sum + BigComplex::from_rational(1, 0, p) / diff;
            }
            BigComplex denom = BigComplex::from_rational(1, 0, p) - newton * sum;
            if (denom.re.is_zero() && denom.im.is_zero()) continue;
            BigComplex w = newton / denom;
            z[i] = z[i] - w;
            BigFloat scale = max(z[i].modulus(), BigFloat(1, p));
            BigFloat step = w.modulus();
            // converged, or stalled at the rounding level
            bool stop = step <= tol * scale ||
                        (it > 0 && step <= stall * scale && step * BigFloat(2, p) >= last[i]);
            last[i] = step;
            if (stop) {
                done[i] = true;
                --remaining;
            }
        }
    }
}

struct FactorRoots {
    std::vector<BigComplex> centers;
    std::vector<BigFloat> radii;
    std::vector<bool> real;
    std::vector<std::optional<Rational>> exact;
};

std::optional<Rational> rational_in_disk(const Polynomial& f, const BigFloat& center, const BigFloat& radius) {
    const mpfr_prec_t p = center.precision();
    BigFloat lo(p), hi(p);
    mpfr_sub(lo.get(), center.get(), radius.get(), MPFR_RNDD);
    mpfr_add(hi.get(), center.get(), radius.get(), MPFR_RNDU);
    Rational qlo = lo.to_rational(), qhi = hi.to_rational();
    Rational simple = simplest_between(qlo, qhi);
    if (f(simple) == 0) return simple;
    Polynomial prim = f.primitive();
    Rational lc = abs(prim.leading());
    Rational cand = Rational(floor(center.to_rational() * lc + Rational(1, 2))) / lc;
    cand.canonicalize();
    if (cand >= qlo && cand <= qhi && f(cand) == 0) return cand;
    return std::nullopt;
}

// Roots of one square-free factor at a fixed precision; empty when the disks
// could not be separated.
std::optional<FactorRoots> factor_roots(const Polynomial& f, std::vector<BigComplex>& warm, mpfr_prec_t p) {
    const int d = f.degree();
    FactorRoots out;
    if (d == 1) {
        Rational r = -f.coeff(0) / f.coeff(1);
        out.centers.push_back(BigComplex::from_rational(r, 0, p));
        out.radii.emplace_back(p);
        out.real.push_back(true);
        out.exact.emplace_back(r);
        return out;
    }
    std::vector<BigFloat> a;
    for (const auto& c : f.coeffs()) a.emplace_back(c, p);
    std::vector<BigComplex> z;
    if (warm.size() == static_cast<std::size_t>(d)) {
        for (const auto& w : warm) z.emplace_back(BigFloat(w.re.to_rational(), p), BigFloat(w.im.to_rational(), p));
    } else {
        z = initial_points(a);
    }
    aberth(a, z);
    warm = z;

    std::vector<BigFloat> radii = inclusion_radii(a, z);
    std::vector<bool> real(static_cast<std::size_t>(d), false);
    bool moved = false;
    for (int i = 0; i < d; ++i) {
        if (abs(z[static_cast<std::size_t>(i)].im) <= radii[static_cast<std::size_t>(i)]) {
            z[static_cast<std::size_t>(i)].im = BigFloat(p);
            real[static_cast<std::size_t>(i)] = true;
            moved = true;
        }
    }
    if (moved) radii = inclusion_radii(a, z);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (!disjoint(z[static_cast<std::size_t>(i)], radii[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)],
                          radii[static_cast<std::size_t>(j)])) {
                warm.clear();
                return std::nullopt;
            }
    for (int i = 0; i < d; ++i) {
        std::optional<Rational> ex;
        if (real[static_cast<std::size_t>(i)]) ex = rational_in_disk(f, z[static_cast<std::size_t>(i)].re, radii[static_cast<std::size_t>(i)]);
        if (ex) {
            out.centers.push_back(BigComplex::from_rational(*ex, 0, p));
            out.radii.emplace_back(p);
        } else {
            out.centers.push_back(z[static_cast<std::size_t>(i)]);
            out.radii.push_back(radii[static_cast<std::size_t>(i)]);
        }
        out.real.push_back(real[static_cast<std::size_t>(i)]);
        out.exact.push_back(ex);
    }
    return out;
}

}  // namespace

OrderedRootSet certified_roots(const Polynomial& p, mpfr_prec_t precision_bits, mpfr_prec_t max_bits) {
    if (p.degree() < 1) throw std::domain_error("certified_roots: constant polynomial");
    auto factors = square_free_decomposition(p);
    std::vector<std::vector<BigComplex>> warm(factors.size());
    for (mpfr_prec_t prec = precision_bits; prec <= max_bits; prec *= 2) {
        OrderedRootSet set;
        set.degree = p.degree();
        set.precision = prec;
        bool ok = true;
        for (std::size_t f = 0; f < factors.size() && ok; ++f) {
            auto fr = factor_roots(factors[f].first, warm[f], prec);
            if (!fr) {
                ok = false;
                break;
            }
            for (std::size_t i = 0; i < fr->centers.size(); ++i)
                set.roots.push_back({fr->centers[i], fr->radii[i], factors[f].second, fr->real[i], fr->exact[i]});
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < set.roots.size() && ok; ++i)
            for (std::size_t j = i + 1; j < set.roots.size() && ok; ++j)
                if (!disjoint(set.roots[i].center, set.roots[i].radius, set.roots[j].center, set.roots[j].radius))
                    ok = false;
        if (!ok) continue;
        std::sort(set.roots.begin(), set.roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
            if (a.center.re != b.center.re) return a.center.re < b.center.re;
            return a.center.im < b.center.im;
        });
        return set;
    }
    throw PrecisionExhausted("certified_roots: disks not separated at " + std::to_string(max_bits) + " bits for " +
                             p.to_string("z"));
}

std::optional<RealPartCount> real_part_position(const OrderedRootSet& set, const Rational& threshold) {
    RealPartCount count;
    for (const auto& r : set.roots) {
        int side;
        if (r.exact) {
            side = sgn(Rational(*r.exact - threshold));
        } else {
            const mpfr_prec_t p = r.center.precision();
            BigFloat lo(p), hi(p);
            mpfr_sub(lo.get(), r.center.re.get(), r.radius.get(), MPFR_RNDD);
            mpfr_add(hi.get(), r.center.re.get(), r.radius.get(), MPFR_RNDU);
            if (hi.compare(threshold) < 0)
                side = -1;
            else if (lo.compare(threshold) > 0)
                side = 1;
            else
                return std::nullopt;
        }
        if (side < 0)
            count.left += r.multiplicity;
        else if (side == 0)
            count.on += r.multiplicity;
        else
            count.right += r.multiplicity;
    }
    return count;
}

}  // namespace esa
