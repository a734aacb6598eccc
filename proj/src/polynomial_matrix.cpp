#include "esa/polynomial_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace esa {

Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        const Rational p = m[col][col];
        det *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / p;
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

PolynomialMatrix::PolynomialMatrix(int dimension) : dim_(dimension) {
    if (dimension <= 0) throw std::invalid_argument("PolynomialMatrix: dimension must be positive");
    entries_.resize(static_cast<std::size_t>(dimension) * static_cast<std::size_t>(dimension));
}

std::size_t PolynomialMatrix::index(int row, int col) const {
    if (row < 0 || col < 0 || row >= dim_ || col >= dim_) throw std::out_of_range("PolynomialMatrix index");
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(col);
}

int PolynomialMatrix::max_entry_degree() const {
    int d = 0;
    for (const auto& e : entries_) d = std::max(d, e.degree());
    return d;
}

RationalMatrix PolynomialMatrix::evaluate(const Rational& c) const {
    RationalMatrix out(static_cast<std::size_t>(dim_), std::vector<Rational>(static_cast<std::size_t>(dim_)));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j)(c);
    return out;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    const std::size_t n = xs.size();
    // Divided differences in place.
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational den = xs[i] - xs[i - level];
            if (den == 0) throw std::invalid_argument("interpolate: repeated abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / den;
        }
    Polynomial p;
    for (std::size_t i = n; i-- > 0;) {
        p *= Polynomial::linear_factor(xs[i]);
        p += Polynomial::constant(dd[i]);
    }
    return p;
}

Polynomial polymatrix_det(const PolynomialMatrix& m) {
    const int points = m.dimension() * std::max(1, m.max_entry_degree()) + 1;
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<std::size_t>(points));
    ys.reserve(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        // 0, 1, -1, 2, -2, ... keeps the sample values small.
        Rational x = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
        xs.push_back(x);
        ys.push_back(determinant(m.evaluate(x)));
    }
    return interpolate(xs, ys);
}

}  // namespace esa
