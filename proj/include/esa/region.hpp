#pragma once

#include "esa/real_roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace esa {

/// Interval endpoint: -inf, +inf or a real algebraic number.
struct Endpoint {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    AlgebraicReal value;
    bool closed = true;  // ignored for infinite endpoints

    static Endpoint neg_inf() { return {Kind::NegInf, {}, false}; }
    static Endpoint pos_inf() { return {Kind::PosInf, {}, false}; }
    static Endpoint at(AlgebraicReal v, bool closed = true) { return {Kind::Finite, std::move(v), closed}; }
    static Endpoint at(const Rational& q, bool closed = true) { return at(AlgebraicReal::from_rational(q), closed); }
    bool finite() const { return kind == Kind::Finite; }
};

/// Compares endpoint positions (closedness ignored).
int compare(const Endpoint& a, const Endpoint& b);

struct Piece {
    Endpoint lo;
    Endpoint hi;
    bool contains(const Rational& c) const;
};

/// Sorted, pairwise disjoint union of intervals.
struct IntervalSet {
    std::vector<Piece> pieces;
    bool contains(const Rational& c) const;
    bool empty() const { return pieces.empty(); }
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
/// Same pieces with equal endpoints and closedness.
bool same_set(const IntervalSet& a, const IntervalSet& b);

/// "[0, 1.0436e10] ∪ [1.8324e10, ∞)"
std::string render(const IntervalSet& s, int digits);
std::string render(const Endpoint& e, int digits);

}  // namespace esa
