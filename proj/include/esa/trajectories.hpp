#pragma once

#include "esa/certified_roots.hpp"

#include <functional>
#include <iosfwd>
#include <vector>

namespace esa {

struct TrajectoryRow {
    Rational c;
    int j = 0;  // 1-based label
    double re = 0;
    double im = 0;
    double radius = 0;
    bool ambiguous = false;
};

/// Roots of family(c) along an increasing grid, labeled by nearest-neighbour
/// matching against the previous grid point. The first point is labeled in
/// sorted order. A label is flagged ambiguous when another root is less than
/// twice as close as its match. Grid points are solved concurrently.
std::vector<TrajectoryRow> trace_roots(const std::function<Polynomial(const Rational&)>& family,
                                       const std::vector<Rational>& c_grid, mpfr_prec_t precision = 128);

/// CSV with columns c,j,re,im,radius,ambiguous_flag.
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRow>& rows);

}  // namespace esa
