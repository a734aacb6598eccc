#include "esa/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace esa {

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    chain_.push_back(p.primitive());
    if (p.degree() < 1) return;
    chain_.push_back(p.derivative().primitive());
    while (chain_.back().degree() > 0) {
        Polynomial r = divide(chain_[chain_.size() - 2], chain_.back()).remainder;
        if (r.is_zero()) break;
        chain_.push_back((-r).primitive());
    }
}

int SturmChain::variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& f : chain_) {
        int s = f.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmChain::count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

int SturmChain::count_all() const {
    // Signs at -inf / +inf come from the leading coefficients.
    int vneg = 0, vpos = 0, lneg = 0, lpos = 0;
    for (const auto& f : chain_) {
        int sp = sgn(f.leading());
        int sn = (f.degree() % 2 == 0) ? sp : -sp;
        if (lpos != 0 && sp != lpos) ++vpos;
        if (lneg != 0 && sn != lneg) ++vneg;
        lpos = sp;
        lneg = sn;
    }
    return vneg - vpos;
}

AlgebraicReal::AlgebraicReal(Polynomial defining, Interval interval)
    : defining_(std::move(defining)), interval_(std::move(interval)) {
    if (defining_.is_zero()) throw std::invalid_argument("AlgebraicReal: zero defining polynomial");
    if (interval_.lo > interval_.hi) throw std::invalid_argument("AlgebraicReal: empty interval");
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& q) {
    return AlgebraicReal(Polynomial::linear_factor(q), Interval{q, q});
}

AlgebraicReal AlgebraicReal::bisected() const {
    if (interval_.exact()) return *this;
    Rational mid = midpoint(interval_.lo, interval_.hi);
    int sm = defining_.sign_at(mid);
    if (sm == 0) return AlgebraicReal(defining_, Interval{mid, mid});
    int sl = defining_.sign_at(interval_.lo);
    if (sl == sm) return AlgebraicReal(defining_, Interval{mid, interval_.hi});
    return AlgebraicReal(defining_, Interval{interval_.lo, mid});
}

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
    if (width <= 0) throw std::invalid_argument("refine width must be positive");
    AlgebraicReal x = *this;
    while (x.interval_.width() > width) x = x.bisected();
    return x;
}

std::optional<Rational> AlgebraicReal::as_rational() const {
    if (interval_.exact()) return interval_.lo;
    Polynomial prim = defining_.primitive();
    Rational lc = abs(prim.leading());
    AlgebraicReal x = refined(1 / (2 * lc));
    if (x.interval_.exact()) return x.interval_.lo;
    Rational scaled = midpoint(x.interval_.lo, x.interval_.hi) * lc;
    Rational cand = Rational(floor(scaled + Rational(1, 2))) / lc;
    cand.canonicalize();
    if (cand >= x.interval_.lo && cand <= x.interval_.hi && prim(cand) == 0) return cand;
    return std::nullopt;
}

int AlgebraicReal::compare(const Rational& q) const {
    if (q < interval_.lo) return 1;
    if (q > interval_.hi) return -1;
    if (interval_.exact()) return 0;
    int sq = defining_.sign_at(q);
    if (sq == 0) return 0;
    return sq == defining_.sign_at(interval_.lo) ? 1 : -1;
}

double AlgebraicReal::to_double() const {
    if (interval_.exact()) return interval_.lo.get_d();
    AlgebraicReal x = *this;
    while (!x.interval_.exact() && (x.interval_.lo <= 0 && x.interval_.hi >= 0)) {
        if (x.compare(Rational(0)) == 0) return 0.0;
        x = x.bisected();
    }
    Rational scale = std::min(abs(x.interval_.lo), abs(x.interval_.hi));
    x = x.refined(scale / Rational(Integer(1) << 60));
    return midpoint(x.interval_.lo, x.interval_.hi).get_d();
}

std::string AlgebraicReal::to_decimal(int digits) const {
    if (interval_.exact()) return esa::to_decimal(interval_.lo, digits);
    if (compare(Rational(0)) == 0) return "0";
    AlgebraicReal x = *this;
    while (x.interval_.lo <= 0 && x.interval_.hi >= 0) x = x.bisected();
    if (x.interval_.exact()) return esa::to_decimal(x.interval_.lo, digits);
    Rational scale = std::min(abs(x.interval_.lo), abs(x.interval_.hi));
    Rational tol = scale / pow(Rational(10), static_cast<unsigned>(digits + 3));
    x = x.refined(tol);
    if (x.interval_.exact()) return esa::to_decimal(x.interval_.lo, digits);
    return esa::to_decimal(midpoint(x.interval_.lo, x.interval_.hi), digits);
}

namespace {

// Number of roots of g (square-free) in the closed interval [a, b].
int closed_count(const Polynomial& g, const Rational& a, const Rational& b) {
    SturmChain sc(g);
    return sc.count(a, b) + (g.sign_at(a) == 0 ? 1 : 0);
}

}  // namespace

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (b.is_exact()) return a.compare(b.interval().lo);
    if (a.is_exact()) return -b.compare(a.interval().lo);
    AlgebraicReal x = a, y = b;
    Polynomial g = gcd(x.defining(), y.defining());
    bool shared = g.degree() > 0;
    for (;;) {
        if (x.interval().hi < y.interval().lo) return -1;
        if (y.interval().hi < x.interval().lo) return 1;
        if (x.is_exact()) return -y.compare(x.interval().lo);
        if (y.is_exact()) return x.compare(y.interval().lo);
        if (shared) {
            Rational lo = std::max(x.interval().lo, y.interval().lo);
            Rational hi = std::min(x.interval().hi, y.interval().hi);
            if (closed_count(g, lo, hi) > 0) return 0;
        }
        x = x.bisected();
        y = y.bisected();
    }
}

namespace {

struct Pending {
    Rational lo, hi;
    int roots;
};

// Isolates the real roots of a square-free polynomial f. Endpoints of the
// returned non-degenerate intervals are never roots.
std::vector<Interval> isolate_square_free(const Polynomial& f) {
    std::vector<Interval> out;
    if (f.degree() < 1) return out;
    SturmChain sc(f);
    Rational bound = cauchy_root_bound(f);
    std::vector<Pending> stack{{-bound, bound, sc.count(-bound, bound)}};
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        if (cur.roots == 0) continue;
        if (cur.roots == 1) {
            out.push_back({cur.lo, cur.hi});
            continue;
        }
        Rational mid = midpoint(cur.lo, cur.hi);
        if (f.sign_at(mid) != 0) {
            stack.push_back({cur.lo, mid, sc.count(cur.lo, mid)});
            stack.push_back({mid, cur.hi, sc.count(mid, cur.hi)});
            continue;
        }
        out.push_back({mid, mid});
        // Step off the exact root until the punctured neighbourhood is clear.
        Rational delta = (cur.hi - cur.lo) / 4;
        while (f.sign_at(mid - delta) == 0 || f.sign_at(mid + delta) == 0 || sc.count(mid - delta, mid + delta) != 1)
            delta /= 2;
        stack.push_back({cur.lo, mid - delta, sc.count(cur.lo, mid - delta)});
        stack.push_back({mid + delta, cur.hi, sc.count(mid + delta, cur.hi)});
    }
    return out;
}

}  // namespace

std::vector<IsolatedRoot> sturm_isolate(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("sturm_isolate: zero polynomial");
    std::vector<IsolatedRoot> roots;
    for (const auto& [factor, mult] : square_free_decomposition(p))
        for (const auto& iv : isolate_square_free(factor)) roots.push_back({iv, mult, factor});

    // Roots of distinct factors are distinct; separate overlapping intervals.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                auto& a = roots[i];
                auto& b = roots[j];
                while (!(a.interval.hi < b.interval.lo || b.interval.hi < a.interval.lo)) {
                    a.interval = a.value().bisected().interval();
                    b.interval = b.value().bisected().interval();
                    changed = true;
                }
            }
    }
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.interval.lo < b.interval.lo; });
    return roots;
}

std::vector<AlgebraicReal> real_roots(const Polynomial& p) {
    std::vector<AlgebraicReal> out;
    for (const auto& r : sturm_isolate(p)) out.push_back(r.value());
    return out;
}

Interval algebraic_refine(const AlgebraicReal& x, const Rational& width) { return x.refined(width).interval(); }

}  // namespace esa
