#ifndef POSLAB_POLYNOMIAL_HPP
#define POSLAB_POLYNOMIAL_HPP

#include "poslab/scalar.hpp"

#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

namespace poslab {

/// Univariate polynomial with exact rational coefficients, constant term
/// first. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int degree, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i, zero outside the stored range.
  Rational coeff(int i) const;
  Rational leading() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplies by x^k.
  Polynomial shifted(int k) const;

  /// Horner evaluation in any scalar the coefficients convert to.
  template <typename Scalar>
  Scalar eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + convert<Scalar>(*it);
    return acc;
  }

  std::string str(const std::string& var = "x") const;

 private:
  template <typename Scalar>
  static Scalar convert(const Rational& c) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      return c;
    } else if constexpr (std::is_same_v<Scalar, Real>) {
      return to_real(c);
    } else {
      return static_cast<Scalar>(to_real(c));
    }
  }

  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact Horner evaluation.
Rational eval_poly(const Polynomial& p, const Rational& x);

/// Polynomial in (x, y); coefficient (i, j) multiplies x^i y^j.
class BivariatePolynomial {
 public:
  BivariatePolynomial() : coeffs_(RationalMatrix::Zero(1, 1)) {}
  explicit BivariatePolynomial(RationalMatrix coeffs) : coeffs_(std::move(coeffs)) {}

  static BivariatePolynomial in_x(const Polynomial& p);
  static BivariatePolynomial in_y(const Polynomial& p);

  const RationalMatrix& coeffs() const { return coeffs_; }
  Rational coeff(int i, int j) const;

  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& a);
  /// Compares as polynomials, ignoring zero padding.
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b);

 private:
  RationalMatrix coeffs_;
};

/// p(a x + b y) expanded in the monomials of x and y.
BivariatePolynomial substitute_linear(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace poslab

#endif  // POSLAB_POLYNOMIAL_HPP
