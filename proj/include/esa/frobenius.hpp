#pragma once

#include "esa/indicial.hpp"

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace esa {

enum class Locus { Line, Parabola };
/// Position of c1 relative to the pivot 5/4 - 4k^2 (lines) or 5/4 - 8k^2
/// (parabolas).
enum class Side { Above, Pivot, Below };

struct Membership {
    Locus locus = Locus::Line;
    int k = 0;
    Side side = Side::Above;
    /// Exponent relation holding on this branch, e.g. "alpha1-alpha4=-4k".
    std::string relation;
};

struct ResonanceClassification {
    Rational c1;
    Rational c2;
    std::vector<Membership> memberships;

    std::vector<int> lines() const;
    std::vector<int> parabolas() const;
    bool generic() const { return memberships.empty(); }
};

/// Line L_k:     c2 = (-9 - 24c1 - 128c1k^2 + 160k^2 - 256k^4)/16.
/// Parabola P_k: c2 = 1 - 4c1 + c1^2 + 16c1k^2 - 20k^2 + 64k^4.
/// Memberships are found exactly for every k; only k <= k_max are reported.
ResonanceClassification classify_resonance(const Rational& c1, const Rational& c2, int k_max = 1000000);

enum class SolutionKind { SeriesF03, MeijerG20, MeijerG30, MeijerG40 };
std::string to_string(SolutionKind kind);

struct SolutionDescriptor {
    SolutionKind kind = SolutionKind::SeriesF03;
    /// SeriesF03: r^{alpha_j} 0F3(1 + (alpha_j - alpha_j')/4 for j' in `order`).
    /// Meijer G: parameters alpha_i/4 for i in `order` (1-based), as displayed.
    int exponent = 0;
    std::vector<int> order;
    /// The argument is argument_sign * lambda r^4 / 256.
    int argument_sign = 1;
    std::complex<double> exponent_value;
    std::vector<std::complex<double>> parameters;
};

enum class CaseTag { Generic, A3a_upper, A3a_lower, A3b_upper, A3b_lower, A3c, A3d, NotCovered };
std::string to_string(CaseTag tag);

struct BasisSelection {
    CaseTag tag = CaseTag::Generic;
    ResonanceClassification classification;
    std::complex<double> lambda;
    std::array<std::complex<double>, 4> alpha;
    /// Four descriptors, empty for NotCovered.
    std::vector<SolutionDescriptor> solutions;
};

BasisSelection select_fundamental_system(const Rational& c1, const Rational& c2, std::complex<double> lambda);

class ResonanceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct SeriesValue {
    std::complex<double> value;
    long terms = 0;
    /// Bound on the modulus of the omitted tail.
    double tail_bound = 0;
};

/// sum_k z^k / ((p1)_k (p2)_k (p3)_k k!), stopped once a geometric ratio
/// bound certifies the tail <= tol. ResonanceError on nonpositive-integer
/// parameters; std::runtime_error past term_cap terms.
SeriesValue eval_0F3(const std::array<std::complex<double>, 3>& p, std::complex<double> z, double tol,
                     long term_cap = 1000000);

/// |tau_2(c1,c2) y - lambda y| at r for the SeriesF03 solution `index`,
/// differentiating the truncated series term by term. std::invalid_argument
/// for Meijer G members or r <= 0.
double ode_residual(const BasisSelection& sel, int index, std::complex<double> lambda, double r, double tol = 1e-20);
/// Same for a linear combination of SeriesF03 members.
double ode_residual_combination(const BasisSelection& sel, const std::vector<std::complex<double>>& coeffs,
                                std::complex<double> lambda, double r, double tol = 1e-20);

struct GeometryCheck {
    std::string identity;
    int h = 0;
    int k = 0;
    bool holds = false;
};

struct GeometryReport {
    std::vector<GeometryCheck> checks;
    bool all_hold() const;
};

/// Tangencies and pairwise intersection abscissae of the loci, exactly.
GeometryReport resonance_geometry_table(int h_max, int k_max);

struct LocusSample {
    std::string locus;  // "line", "parabola" or "region"
    int k = 0;          // -1 for region samples
    Rational c1;
    Rational c2;
    bool esa = false;
};

/// Lines k = 0..5, parabolas k = 0..3 and a grid of ESA-region samples.
std::vector<LocusSample> figure2_data();

}  // namespace esa
