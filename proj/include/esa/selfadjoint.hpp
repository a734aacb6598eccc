#pragma once

#include "esa/config.hpp"
#include "esa/region.hpp"
#include "esa/stability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace esa {

enum class Verdict { ESA, NotESA };
std::string to_string(Verdict v);

struct EsaVerdict {
    IndicialSpec spec;
    Verdict verdict = Verdict::NotESA;
    HalfPlaneCount count;
    /// det of the Hurwitz matrix of D(c; z - 1/2).
    Rational det_h;
    AxisRoots axis;
    Polynomial indicial;
};

/// ESA iff exactly m roots of D(c; .) have real part <= -1/2.
EsaVerdict esa_decide_radial(const IndicialSpec& spec, const Config& cfg = {});
/// Same test for D_2(c1, c2; .) with raw parameters (m = 2); spec.c is unused.
EsaVerdict esa_decide_euler(const EulerParams& p, const Config& cfg = {});

enum class CertificationMode { Radial, UpToLmax, ClosedForm };
std::string to_string(CertificationMode mode);

struct BoundaryCandidate {
    AlgebraicReal value;
    int l = 0;
    int multiplicity = 1;
};

struct SampleDecision {
    Rational c;
    Verdict verdict = Verdict::NotESA;
    int l = 0;
};

struct EsaRegion {
    int m = 0;
    int n = 0;
    std::optional<int> l;  // set for a single radial problem
    IntervalSet set;
    std::vector<BoundaryCandidate> boundary_candidates;
    /// Candidates with non-ESA on both sides that could not be decided.
    std::vector<BoundaryCandidate> indeterminate;
    std::vector<SampleDecision> samples;
    CertificationMode mode = CertificationMode::Radial;
    /// l_max for full-operator regions.
    int certified_up_to_l = 0;
    std::optional<bool> oracle_agrees;
};

EsaRegion esa_region_radial(int m, int n, int l, const Config& cfg = {});
/// Intersection of the radial regions for 0 <= l <= lmax, checked against a
/// closed form when one exists.
EsaRegion esa_region_full(int m, int n, int lmax, const Config& cfg = {});

struct Threshold {
    enum class Source { Engine, ClosedForm };
    AlgebraicReal value;
    Source source = Source::Engine;
};

/// gamma_{m,n,l}: lower end of the unbounded ESA piece. Empty when that piece
/// is the whole line.
std::optional<Threshold> gamma_threshold(int m, int n, int l, const Config& cfg = {});

/// ESA at c = 0 for every l <= cfg.lmax.
bool power_zero_coupling(int m, int n, const Config& cfg = {});

struct ConjectureRow {
    int m = 0;
    AlgebraicReal gamma;
    double gamma_value = 0;
    /// (2m^2/pi)^{2m}
    double asymptotic = 0;
    /// log(gamma) / log((2m^2/pi)^{2m}); NaN when gamma <= 0.
    double log_ratio = 0;
};
/// Exploratory: gamma_{m,3,0} against the conjectured growth.
std::vector<ConjectureRow> conjecture_explore(int m_max, const Config& cfg = {});

}  // namespace esa
