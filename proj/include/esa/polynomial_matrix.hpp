#pragma once

#include "esa/polynomial.hpp"

#include <vector>

namespace esa {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination over Q.
Rational determinant(RationalMatrix m);

/// Square matrix over Q[c].
class PolynomialMatrix {
public:
    explicit PolynomialMatrix(int dimension);

    int dimension() const { return dim_; }
    const Polynomial& operator()(int row, int col) const { return entries_[index(row, col)]; }
    Polynomial& operator()(int row, int col) { return entries_[index(row, col)]; }

    int max_entry_degree() const;
    RationalMatrix evaluate(const Rational& c) const;

private:
    std::size_t index(int row, int col) const;
    int dim_;
    std::vector<Polynomial> entries_;
};

/// Exact determinant in Q[c]: evaluation at dimension * maxdeg + 1 integer
/// points followed by Newton interpolation.
Polynomial polymatrix_det(const PolynomialMatrix& m);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace esa
