#include "poslab/scalar.hpp"

#include "poslab/error.hpp"

#include <cctype>

namespace poslab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);

  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidArgument("not an exact rational (expected p/q): '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::vector<std::string> format_rationals(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(format_rational(v));
  return out;
}

Real to_real(const Rational& value) {
  return Real(numerator(value).str()) / Real(denominator(value).str());
}

std::string format_real(const Real& value, int significant_digits) {
  return value.str(significant_digits, std::ios_base::fmtflags(0));
}

Rational factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of negative number");
  Integer acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return Rational(acc);
}

Rational double_factorial(int n) {
  if (n < -1) throw InvalidArgument("double factorial below -1");
  Integer acc = 1;
  for (int i = n; i > 1; i -= 2) acc *= i;
  return Rational(acc);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Integer acc = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return Rational(acc);
}

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) return power(Rational(1) / base, -exponent);
  Rational acc = 1;
  for (int i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  const Integer n = numerator(value);
  const Integer d = denominator(value);
  const Integer rn = boost::multiprecision::sqrt(n);
  const Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace poslab
