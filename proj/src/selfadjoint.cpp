#include "esa/selfadjoint.hpp"

#include "esa/oracles.hpp"
#include "esa/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace esa {

std::string to_string(Verdict v) { return v == Verdict::ESA ? "ESA" : "NotESA"; }

std::string to_string(CertificationMode mode) {
    switch (mode) {
        case CertificationMode::Radial:
            return "radial";
        case CertificationMode::UpToLmax:
            return "up-to-lmax";
        case CertificationMode::ClosedForm:
            return "closed-form";
    }
    return "radial";
}

namespace {

EsaVerdict decide(const Polynomial& p, const IndicialSpec& spec, const Config& cfg) {
    EsaVerdict v;
    v.spec = spec;
    v.indicial = p;
    v.count = halfplane_count(p, cfg.precision_ladder, cfg.max_precision_bits);
    v.det_h = determinant(hurwitz_matrix(p.shifted(Rational(-1, 2))));
    v.axis = axis_roots_exact(p);
    const int low = v.count.left + v.count.axis;
    if (low > spec.m)
        throw std::logic_error("esa: more than m roots with Re <= -1/2 for " + p.to_string("z"));
    v.verdict = low == spec.m ? Verdict::ESA : Verdict::NotESA;
    return v;
}

AlgebraicReal candidate_value(const IsolatedRoot& r) {
    AlgebraicReal x = r.value();
    if (auto q = x.as_rational()) return AlgebraicReal::from_rational(*q);
    return x;
}

// Rational points strictly between consecutive candidates, plus one below
// and one above.
std::vector<Rational> gap_samples(const std::vector<IsolatedRoot>& roots, const Polynomial& det) {
    std::vector<Rational> s;
    if (roots.empty()) return {Rational(0)};
    s.push_back(floor(roots.front().interval.lo) - 1);
    for (std::size_t i = 1; i < roots.size(); ++i) {
        const Rational& a = roots[i - 1].interval.hi;
        const Rational& b = roots[i].interval.lo;
        Rational c = simplest_between(a, b);
        if (c == a || c == b || det(c) == 0) c = midpoint(a, b);
        s.push_back(c);
    }
    s.push_back(ceil(roots.back().interval.hi) + 1);
    return s;
}

Endpoint lower_end(const std::vector<AlgebraicReal>& cands, std::size_t elem) {
    if (elem == 0) return Endpoint::neg_inf();
    if (elem % 2 == 1) return Endpoint::at(cands[(elem - 1) / 2], true);
    return Endpoint::at(cands[elem / 2 - 1], false);
}

Endpoint upper_end(const std::vector<AlgebraicReal>& cands, std::size_t elem) {
    if (elem == 2 * cands.size()) return Endpoint::pos_inf();
    if (elem % 2 == 1) return Endpoint::at(cands[(elem - 1) / 2], true);
    return Endpoint::at(cands[elem / 2], false);
}

}  // namespace

EsaVerdict esa_decide_radial(const IndicialSpec& spec, const Config& cfg) {
    spec.validate();
    return decide(build_indicial(spec), spec, cfg);
}

EsaVerdict esa_decide_euler(const EulerParams& p, const Config& cfg) {
    IndicialSpec spec;
    spec.m = 2;
    return decide(euler_quartic(p), spec, cfg);
}

EsaRegion esa_region_radial(int m, int n, int l, const Config& cfg) {
    IndicialSpec base{m, n, l, 0};
    base.validate();
    HurwitzData h = hurwitz_assemble(m, n, l);
    auto roots = sturm_isolate(h.det_in_c);
    std::vector<Rational> gaps = gap_samples(roots, h.det_in_c);

    EsaRegion region;
    region.m = m;
    region.n = n;
    region.l = l;
    region.mode = CertificationMode::Radial;
    region.certified_up_to_l = l;

    std::vector<AlgebraicReal> cands;
    for (const auto& r : roots) {
        cands.push_back(candidate_value(r));
        region.boundary_candidates.push_back({cands.back(), l, r.multiplicity});
    }

    // Elements alternate gap, candidate, gap, ..., gap.
    std::vector<Rational> points;
    std::vector<std::size_t> point_elem;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        points.push_back(gaps[i]);
        point_elem.push_back(2 * i);
        if (i < cands.size())
            if (auto q = cands[i].as_rational()) {
                points.push_back(*q);
                point_elem.push_back(2 * i + 1);
            }
    }
    auto verdicts = parallel_map(points.size(), [&](std::size_t i) {
        IndicialSpec s = base;
        s.c = points[i];
        return decide(build_indicial(s), s, cfg).verdict;
    });

    const std::size_t elems = 2 * cands.size() + 1;
    std::vector<int> in(elems, -1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        in[point_elem[i]] = verdicts[i] == Verdict::ESA ? 1 : 0;
        region.samples.push_back({points[i], verdicts[i], l});
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
        int& e = in[2 * i + 1];
        if (e >= 0) continue;
        if (in[2 * i] == 1 || in[2 * i + 2] == 1) {
            e = 1;
        } else {
            e = 0;
            region.indeterminate.push_back(region.boundary_candidates[i]);
        }
    }

    for (std::size_t a = 0; a < elems;) {
        if (in[a] != 1) {
            ++a;
            continue;
        }
        std::size_t b = a;
        while (b + 1 < elems && in[b + 1] == 1) ++b;
        region.set.pieces.push_back({lower_end(cands, a), upper_end(cands, b)});
        a = b + 1;
    }
    return region;
}

EsaRegion esa_region_full(int m, int n, int lmax, const Config& cfg) {
    if (lmax < 0) throw std::invalid_argument("esa_region_full: lmax must be >= 0");
    auto radial = parallel_map(static_cast<std::size_t>(lmax) + 1,
                               [&](std::size_t l) { return esa_region_radial(m, n, static_cast<int>(l), cfg); });
    EsaRegion out;
    out.m = m;
    out.n = n;
    out.mode = CertificationMode::UpToLmax;
    out.certified_up_to_l = lmax;
    out.set = radial.front().set;
    for (const auto& r : radial) {
        out.set = intersect(out.set, r.set);
        out.boundary_candidates.insert(out.boundary_candidates.end(), r.boundary_candidates.begin(),
                                       r.boundary_candidates.end());
        out.indeterminate.insert(out.indeterminate.end(), r.indeterminate.begin(), r.indeterminate.end());
        out.samples.insert(out.samples.end(), r.samples.begin(), r.samples.end());
    }
    OracleRegion oracle = oracle_region(m, n);
    if (oracle.available) {
        out.oracle_agrees = same_set(out.set, oracle.set);
        if (*out.oracle_agrees) out.mode = CertificationMode::ClosedForm;
    }
    return out;
}

std::optional<Threshold> gamma_threshold(int m, int n, int l, const Config& cfg) {
    IndicialSpec base{m, n, l, 0};
    base.validate();
    HurwitzData h = hurwitz_assemble(m, n, l);
    auto roots = sturm_isolate(h.det_in_c);
    std::vector<Rational> gaps = gap_samples(roots, h.det_in_c);
    auto esa_at = [&](const Rational& c) {
        IndicialSpec s = base;
        s.c = c;
        return decide(build_indicial(s), s, cfg).verdict == Verdict::ESA;
    };
    if (!esa_at(gaps.back()))
        throw std::logic_error("gamma_threshold: not ESA above the largest candidate");
    for (std::size_t i = roots.size(); i-- > 0;) {
        AlgebraicReal x = candidate_value(roots[i]);
        auto q = x.as_rational();
        if (q && !esa_at(*q)) return Threshold{x, Threshold::Source::Engine};
        if (!esa_at(gaps[i])) return Threshold{x, Threshold::Source::Engine};
    }
    return std::nullopt;
}

bool power_zero_coupling(int m, int n, const Config& cfg) {
    for (int l = 0; l <= cfg.lmax; ++l)
        if (esa_decide_radial({m, n, l, 0}, cfg).verdict != Verdict::ESA) return false;
    return true;
}

std::vector<ConjectureRow> conjecture_explore(int m_max, const Config& cfg) {
    if (m_max < 1 || m_max > cfg.conjecture_m_max)
        throw std::invalid_argument("conjecture_explore: m_max must lie in 1.." + std::to_string(cfg.conjecture_m_max));
    auto rows = parallel_map(static_cast<std::size_t>(m_max), [&](std::size_t i) {
        const int m = static_cast<int>(i) + 1;
        ConjectureRow row;
        row.m = m;
        auto g = gamma_threshold(m, 3, 0, cfg);
        if (!g) throw std::logic_error("conjecture_explore: no finite threshold");
        row.gamma = g->value;
        row.gamma_value = g->value.to_double();
        row.asymptotic = std::pow(2.0 * m * m / M_PI, 2.0 * m);
        row.log_ratio = row.gamma_value > 0 ? std::log(row.gamma_value) / std::log(row.asymptotic) : std::nan("");
        return row;
    });
    return rows;
}

}  // namespace esa
