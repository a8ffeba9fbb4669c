#include "poslab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace poslab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

Polynomial Polynomial::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(k));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Rational eval_poly(const Polynomial& p, const Rational& x) { return p.eval(x); }

// ---------------------------------------------------------------------------

BivariatePolynomial BivariatePolynomial::in_x(const Polynomial& p) {
  RationalMatrix c = RationalMatrix::Zero(std::max(p.degree() + 1, 1), 1);
  for (int i = 0; i <= p.degree(); ++i) c(i, 0) = p.coeff(i);
  return BivariatePolynomial(std::move(c));
}

BivariatePolynomial BivariatePolynomial::in_y(const Polynomial& p) {
  RationalMatrix c = RationalMatrix::Zero(1, std::max(p.degree() + 1, 1));
  for (int j = 0; j <= p.degree(); ++j) c(0, j) = p.coeff(j);
  return BivariatePolynomial(std::move(c));
}

Rational BivariatePolynomial::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= coeffs_.rows() || j >= coeffs_.cols()) return Rational(0);
  return coeffs_(i, j);
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  const auto rows = std::max(a.coeffs_.rows(), b.coeffs_.rows());
  const auto cols = std::max(a.coeffs_.cols(), b.coeffs_.cols());
  RationalMatrix c = RationalMatrix::Zero(rows, cols);
  c.topLeftCorner(a.coeffs_.rows(), a.coeffs_.cols()) += a.coeffs_;
  c.topLeftCorner(b.coeffs_.rows(), b.coeffs_.cols()) += b.coeffs_;
  return BivariatePolynomial(std::move(c));
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  RationalMatrix c =
      RationalMatrix::Zero(a.coeffs_.rows() + b.coeffs_.rows() - 1, a.coeffs_.cols() + b.coeffs_.cols() - 1);
  for (Eigen::Index i = 0; i < a.coeffs_.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.coeffs_.cols(); ++j) {
      if (a.coeffs_(i, j) == 0) continue;
      c.block(i, j, b.coeffs_.rows(), b.coeffs_.cols()) += a.coeffs_(i, j) * b.coeffs_;
    }
  }
  return BivariatePolynomial(std::move(c));
}

BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& a) {
  return BivariatePolynomial(RationalMatrix(s * a.coeffs_));
}

bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  const auto rows = std::max(a.coeffs_.rows(), b.coeffs_.rows());
  const auto cols = std::max(a.coeffs_.cols(), b.coeffs_.cols());
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (a.coeff(static_cast<int>(i), static_cast<int>(j)) != b.coeff(static_cast<int>(i), static_cast<int>(j))) {
        return false;
      }
    }
  }
  return true;
}

BivariatePolynomial substitute_linear(const Polynomial& p, const Rational& a, const Rational& b) {
  RationalMatrix lin = RationalMatrix::Zero(2, 2);
  lin(1, 0) = a;
  lin(0, 1) = b;
  const BivariatePolynomial linear(lin);
  BivariatePolynomial acc;
  // Horner in the bivariate ring.
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * linear + BivariatePolynomial::in_x(Polynomial::constant(p.coeff(i)));
  }
  return acc;
}

}  // namespace poslab
