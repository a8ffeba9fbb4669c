#include "poslab/momentlab.hpp"

#include "poslab/bareiss.hpp"
#include "poslab/error.hpp"

#include <algorithm>
#include <array>

namespace poslab {

MomentSequence::MomentSequence(std::vector<Rational> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) throw InvalidArgument("moment sequence must have at least one entry");
}

MomentSequence MomentSequence::truncated(std::size_t length) const {
  if (length > values_.size()) throw InsufficientMoments(length, values_.size());
  return MomentSequence({values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(length)}, label_);
}

MomentSequence MomentSequence::relabeled(std::string label) const {
  return MomentSequence(values_, std::move(label));
}

std::optional<int> PmReport::first_negative() const {
  for (std::size_t n = 0; n < hankel_dets.size(); ++n) {
    if (hankel_dets[n] < 0) return static_cast<int>(n);
  }
  return std::nullopt;
}

std::optional<int> PmReport::first_zero() const {
  for (std::size_t n = 0; n < hankel_dets.size(); ++n) {
    if (hankel_dets[n] == 0) return static_cast<int>(n);
  }
  return std::nullopt;
}

RationalMatrix hankel_matrix(const MomentSequence& m, int n, int shift) {
  if (n < 0) throw InvalidArgument("negative Hankel order");
  const std::size_t needed = static_cast<std::size_t>(2 * n + shift + 1);
  if (needed > m.size()) throw InsufficientMoments(needed, m.size());
  RationalMatrix h(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) h(i, j) = m[static_cast<std::size_t>(shift + i + j)];
  }
  return h;
}

Rational hankel_det(const MomentSequence& m, int n) { return bareiss_determinant(hankel_matrix(m, n)); }

Rational shifted_hankel_det(const MomentSequence& m, int n) {
  return bareiss_determinant(hankel_matrix(m, n, 1));
}

PmReport is_pm(const MomentSequence& m, int max_order) {
  if (max_order < 0) throw InvalidArgument("negative order");
  const std::size_t needed = static_cast<std::size_t>(2 * max_order + 1);
  if (needed > m.size()) throw InsufficientMoments(needed, m.size());

  PmReport report;
  report.max_order = max_order;
  for (int n = 0; n <= max_order; ++n) report.hankel_dets.push_back(hankel_det(m, n));
  const int shifted_top = std::min(max_order, (m.max_index() - 1) / 2);
  for (int n = 0; n <= shifted_top; ++n) report.shifted_dets.push_back(shifted_hankel_det(m, n));

  report.pm_order = -1;
  for (const auto& d : report.hankel_dets) {
    if (d < 0) break;
    ++report.pm_order;
  }
  report.strictly_positive =
      std::all_of(report.hankel_dets.begin(), report.hankel_dets.end(), [](const Rational& d) { return d > 0; });
  report.nonneg_support = !report.shifted_dets.empty() &&
                          std::all_of(report.shifted_dets.begin(), report.shifted_dets.end(),
                                      [](const Rational& d) { return d >= 0; });

  if (auto neg = report.first_negative()) {
    report.notes.push_back("negative Hankel determinant at order " + std::to_string(*neg) +
                           ": not a moment sequence of a nonnegative measure");
  } else if (auto zero = report.first_zero()) {
    report.notes.push_back("zero Hankel determinant at order " + std::to_string(*zero) +
                           ": finite support possible");
  }
  if (shifted_top < max_order) {
    report.notes.push_back("shifted determinants tested only to order " + std::to_string(shifted_top));
  }
  return report;
}

namespace {

void require_same_length(const MomentSequence& a, const MomentSequence& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
}

}  // namespace

MomentSequence pm_product(const MomentSequence& a, const MomentSequence& b) {
  require_same_length(a, b);
  std::vector<Rational> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) out[n] = a[n] * b[n];
  return MomentSequence(std::move(out), a.label() + "*" + b.label());
}

MomentSequence pm_mixture(const MomentSequence& a, const MomentSequence& b, const Rational& p) {
  require_same_length(a, b);
  if (p < 0 || p > 1) throw InvalidArgument("mixture weight must lie in [0,1], got " + format_rational(p));
  std::vector<Rational> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) out[n] = p * a[n] + (1 - p) * b[n];
  return MomentSequence(std::move(out), "mix(" + a.label() + "," + b.label() + ")");
}

MomentSequence pm_binomial_combine(const MomentSequence& a, const MomentSequence& b, const Rational& alpha,
                                   const Rational& beta, int sign) {
  require_same_length(a, b);
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  std::vector<Rational> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      Rational term = binomial(static_cast<int>(n), static_cast<int>(i)) * power(alpha, static_cast<int>(i)) *
                      power(beta, static_cast<int>(n - i)) * a[i] * b[n - i];
      acc += (sign < 0 && i % 2 == 1) ? Rational(-term) : term;
    }
    out[n] = acc;
  }
  return MomentSequence(std::move(out), "combine(" + a.label() + "," + b.label() + ")");
}

MomentSequence pm_subsample(const MomentSequence& a, int k, std::optional<std::size_t> length) {
  if (k < 1) throw InvalidArgument("subsample step must be positive");
  const std::size_t available = static_cast<std::size_t>(a.max_index() / k) + 1;
  const std::size_t out_len = length.value_or(available);
  if (out_len == 0) throw InvalidArgument("empty subsample");
  if (out_len > available) throw InsufficientMoments((out_len - 1) * static_cast<std::size_t>(k) + 1, a.size());
  std::vector<Rational> out(out_len);
  for (std::size_t n = 0; n < out_len; ++n) out[n] = a[n * static_cast<std::size_t>(k)];
  return MomentSequence(std::move(out), a.label() + "^" + std::to_string(k));
}

MomentSequence pm_reflect(const MomentSequence& a) {
  std::vector<Rational> out = a.values();
  for (std::size_t n = 1; n < out.size(); n += 2) out[n] = 0;
  return MomentSequence(std::move(out), "reflect(" + a.label() + ")");
}

MomentSequence pm_sqrt_symmetrize(const MomentSequence& a) {
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] < 0) {
      throw InvalidArgument("sqrt symmetrization needs nonnegative entries; entry " + std::to_string(n) + " is " +
                            format_rational(a[n]));
    }
  }
  std::vector<Rational> out(2 * a.size() - 1);
  for (std::size_t k = 0; k < a.size(); ++k) out[2 * k] = a[k];
  return MomentSequence(std::move(out), "sqrt(" + a.label() + ")");
}

// ---------------------------------------------------------------------------
// Catalog

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"geometric", "a^n (point mass at a)", "a"},
      {"gaussian", "0 for odd n, (n-1)!! for even n (standard normal)", ""},
      {"catalan", "C(2n,n)/(n+1)", ""},
      {"factorial", "n! (unit exponential)", ""},
      {"log_kernel", "1/(n+1)^(k+1), integer k >= 0", "k"},
      {"fib_shift", "F_{n+1}", ""},
      {"fib_ratio", "F_{n+1}/(n+1)", ""},
      {"fib_even", "F_{2n+2}/(n+1)", ""},
      {"fib_odd", "(F_{2n+1}-1)/(n+1)", ""},
      {"fib_scaled", "F_{n+1}/3^n", ""},
  };
  return entries;
}

namespace {

// F_0 = 0, F_1 = 1.
std::vector<Integer> fibonacci(std::size_t count) {
  std::vector<Integer> f(std::max<std::size_t>(count, 2));
  f[0] = 0;
  f[1] = 1;
  for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

const Rational& single_param(std::string_view key, std::span<const Rational> params) {
  if (params.size() != 1) {
    throw InvalidArgument("catalog entry '" + std::string(key) + "' takes exactly one parameter");
  }
  return params.front();
}

void no_params(std::string_view key, std::span<const Rational> params) {
  if (!params.empty()) throw InvalidArgument("catalog entry '" + std::string(key) + "' takes no parameter");
}

}  // namespace

MomentSequence builtin(std::string_view key, std::span<const Rational> params, std::size_t length) {
  if (length == 0) throw InvalidArgument("catalog sequence length must be positive");
  std::vector<Rational> v(length);
  std::string label(key);

  if (key == "geometric") {
    const Rational& a = single_param(key, params);
    Rational acc = 1;
    for (auto& x : v) {
      x = acc;
      acc *= a;
    }
    label += "(" + format_rational(a) + ")";
  } else if (key == "gaussian") {
    no_params(key, params);
    for (std::size_t n = 0; n < length; ++n) v[n] = n % 2 ? Rational(0) : double_factorial(static_cast<int>(n) - 1);
  } else if (key == "catalan") {
    no_params(key, params);
    for (std::size_t n = 0; n < length; ++n) {
      v[n] = binomial(2 * static_cast<int>(n), static_cast<int>(n)) / Rational(n + 1);
    }
  } else if (key == "factorial") {
    no_params(key, params);
    for (std::size_t n = 0; n < length; ++n) v[n] = factorial(static_cast<int>(n));
  } else if (key == "log_kernel") {
    const Rational& k = single_param(key, params);
    if (k <= -1) throw InvalidArgument("log_kernel needs k > -1, got " + format_rational(k));
    if (denominator(k) != 1) {
      throw InvalidArgument("log_kernel needs an integer k for exact moments, got " + format_rational(k));
    }
    const int exponent = static_cast<int>(numerator(k)) + 1;
    for (std::size_t n = 0; n < length; ++n) v[n] = Rational(1) / power(Rational(n + 1), exponent);
    label += "(" + format_rational(k) + ")";
  } else if (key == "fib_shift" || key == "fib_ratio" || key == "fib_even" || key == "fib_odd" ||
             key == "fib_scaled") {
    no_params(key, params);
    const auto f = fibonacci(2 * length + 3);
    for (std::size_t n = 0; n < length; ++n) {
      const Rational np1(n + 1);
      if (key == "fib_shift") {
        v[n] = Rational(f[n + 1]);
      } else if (key == "fib_ratio") {
        v[n] = Rational(f[n + 1]) / np1;
      } else if (key == "fib_even") {
        v[n] = Rational(f[2 * n + 2]) / np1;
      } else if (key == "fib_odd") {
        v[n] = Rational(f[2 * n + 1] - 1) / np1;
      } else {
        v[n] = Rational(f[n + 1]) / power(Rational(3), static_cast<int>(n));
      }
    }
  } else {
    throw InvalidArgument("unknown catalog key '" + std::string(key) + "'");
  }
  return MomentSequence(std::move(v), std::move(label));
}

MomentSequence builtin(std::string_view spec, std::size_t length) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return builtin(spec, std::span<const Rational>{}, length);
  const std::array<Rational, 1> param{parse_rational(spec.substr(colon + 1))};
  return builtin(spec.substr(0, colon), param, length);
}

Real carleman_partial(const MomentSequence& m, int terms) {
  if (terms < 0) throw InvalidArgument("negative term count");
  const std::size_t needed = static_cast<std::size_t>(2 * terms + 1);
  if (needed > m.size()) throw InsufficientMoments(needed, m.size());
  Real sum = 0;
  for (int n = 1; n <= terms; ++n) {
    const Rational& even = m[static_cast<std::size_t>(2 * n)];
    if (even <= 0) {
      throw InvalidArgument("Carleman sum needs positive even moments; m_" + std::to_string(2 * n) + " = " +
                            format_rational(even));
    }
    sum += boost::multiprecision::exp(-boost::multiprecision::log(to_real(even)) / (2 * n));
  }
  return sum;
}

Real moment_gf_eval(const MomentSequence& m, const Rational& t, int terms) {
  if (terms < 0) throw InvalidArgument("negative term count");
  if (static_cast<std::size_t>(terms) > m.size()) throw InsufficientMoments(static_cast<std::size_t>(terms), m.size());
  Rational sum = 0;
  Rational weight = 1;  // t^n / n!
  for (int n = 0; n < terms; ++n) {
    sum += weight * m[static_cast<std::size_t>(n)];
    weight *= t / Rational(n + 1);
  }
  return to_real(sum);
}

}  // namespace poslab
