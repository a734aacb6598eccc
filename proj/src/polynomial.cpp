#include "esa/polynomial.hpp"

#include "esa/polynomial_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace esa {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({Rational(-root), Rational(1)}); }

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
    Polynomial p = constant(1);
    for (const auto& r : roots) p *= linear_factor(r);
    return p;
}

Polynomial Polynomial::from_integers(const std::vector<std::string>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.emplace_back(Integer(s));
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(const Rational& a) const {
    // Taylor shift by repeated synthetic division (Horner's scheme).
    std::vector<Rational> v = coeffs_;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k) v[k - 1] += a * v[k];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::reflected() const {
    std::vector<Rational> v = coeffs_;
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled_argument(const Rational& s) const {
    std::vector<Rational> v = coeffs_;
    Rational f = 1;
    for (auto& c : v) {
        c *= f;
        f *= s;
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    Rational inv = 1 / leading();
    return r *= inv;
}

Rational Polynomial::content() const {
    if (is_zero()) return 1;
    Integer g = 0, l = 1;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    return r;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    Rational inv = 1 / content();
    return r *= inv;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(v);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = mag == 1 && k > 0;
        if (!unit) os << mag.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

DivisionResult divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational& lb = b.leading();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        Rational t = rem[static_cast<std::size_t>(k)] / lb;
        quo[static_cast<std::size_t>(k - db)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a.is_zero() ? a : a.primitive();
    Polynomial y = b.is_zero() ? b : b.primitive();
    while (!y.is_zero()) {
        Polynomial r = divide(x, y).remainder;
        x = std::move(y);
        y = r.is_zero() ? r : r.primitive();
    }
    return x.monic();
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
    return q;
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() == 0) return out;
    Polynomial f = p.monic();
    Polynomial df = f.derivative();
    Polynomial a = gcd(f, df);
    Polynomial b = exact_quotient(f, a);
    Polynomial c = exact_quotient(df, a) - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial d = gcd(b, c);
        if (d.degree() > 0) out.emplace_back(d, i);
        Polynomial nb = exact_quotient(b, d);
        c = exact_quotient(c, d) - nb.derivative();
        b = nb.monic();
        ++i;
    }
    return out;
}

Polynomial square_free_part(const Polynomial& p) {
    Polynomial r = Polynomial::constant(1);
    for (const auto& [f, mult] : square_free_decomposition(p)) r *= f;
    return r;
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const int m = a.degree();
    const int n = b.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) return pow(a.leading(), static_cast<unsigned>(n));
    if (n == 0) return pow(b.leading(), static_cast<unsigned>(m));
    const int size = m + n;
    std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = a.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = b.coeff(n - k);
    return determinant(s);
}

Rational discriminant(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1) throw std::domain_error("discriminant of a constant");
    Rational r = resultant(p, p.derivative()) / p.leading();
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) r = -r;
    return r;
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.degree() < 1) return 1;
    Rational m = 0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(Rational(p.coeff(k) / p.leading()))));
    return m + 1;
}

}  // namespace esa
