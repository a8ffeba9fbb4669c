#ifndef POSLAB_SCALAR_HPP
#define POSLAB_SCALAR_HPP

// Scalar types shared by every module.
//
// Rational is an exact, always-reduced GMP rational. Expression templates are
// switched off so that the type behaves like a plain value inside Eigen
// containers. Real is a 50 decimal digit float used only for diagnostics
// (Carleman sums, generating functions, kernel evaluations) and never for a
// positivity decision.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace poslab {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>,
                                           boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Parses "p/q", "p" or "-p/q". Decimal points and exponents are rejected,
/// since a float literal does not name an exact value.
Rational parse_rational(std::string_view text);

/// Canonical "numerator/denominator" form; the denominator is always written,
/// so format_rational(parse_rational(s)) is stable for canonical input.
std::string format_rational(const Rational& value);

std::vector<std::string> format_rationals(const std::vector<Rational>& values);

Real to_real(const Rational& value);

/// Fixed number of significant digits, scientific notation only when needed.
std::string format_real(const Real& value, int significant_digits);

Rational factorial(int n);
Rational double_factorial(int n);  // (-1)!! = 0!! = 1
Rational binomial(int n, int k);
Rational power(const Rational& base, int exponent);

/// Exact square root when value is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace poslab

#endif  // POSLAB_SCALAR_HPP
