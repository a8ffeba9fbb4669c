#ifndef POSLAB_MOMENTLAB_HPP
#define POSLAB_MOMENTLAB_HPP

// Moment sequences, Hankel positivity tests and the algebra of positive
// moment (pm) sequences.

#include "poslab/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace poslab {

/// Finite prefix m_0..m_N of the moments of a (possibly signed) measure.
class MomentSequence {
 public:
  explicit MomentSequence(std::vector<Rational> values, std::string label = {});

  const std::vector<Rational>& values() const { return values_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return values_.size(); }
  /// Highest moment index available.
  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  bool normalized() const { return values_.front() == 1; }

  MomentSequence truncated(std::size_t length) const;
  MomentSequence relabeled(std::string label) const;

  friend bool operator==(const MomentSequence& a, const MomentSequence& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
  std::string label_;
};

/// Hankel determinants of a sequence up to some tested order.
struct PmReport {
  int max_order = 0;
  std::vector<Rational> hankel_dets;   // d_0..d_K
  std::vector<Rational> shifted_dets;  // det[m_{1+i+j}], as far as moments allow
  int pm_order = -1;                   // largest n with d_0..d_n all >= 0
  bool strictly_positive = false;
  bool nonneg_support = false;
  std::vector<std::string> notes;

  bool is_pm() const { return pm_order == max_order; }
  std::optional<int> first_negative() const;
  std::optional<int> first_zero() const;
};

/// [m_{shift+i+j}] for 0 <= i, j <= n.
RationalMatrix hankel_matrix(const MomentSequence& m, int n, int shift = 0);

Rational hankel_det(const MomentSequence& m, int n);
Rational shifted_hankel_det(const MomentSequence& m, int n);

/// Runs the Hankel tests for orders 0..max_order. Shifted determinants are
/// computed for every order the available moments allow (2n+2 entries).
/// Never reports positivity beyond the tested orders.
PmReport is_pm(const MomentSequence& m, int max_order);

// Closure operations. If the inputs are moments of independent X and Y:

/// {a_n b_n}: moments of XY.
MomentSequence pm_product(const MomentSequence& a, const MomentSequence& b);

/// {p a_n + (1-p) b_n}: moments of the p-mixture.
MomentSequence pm_mixture(const MomentSequence& a, const MomentSequence& b, const Rational& p);

/// Moments of beta*Y + sign*alpha*X, sign = +1 or -1.
MomentSequence pm_binomial_combine(const MomentSequence& a, const MomentSequence& b,
                                   const Rational& alpha, const Rational& beta, int sign);

/// {a_{kn}}: moments of X^k. Without a length, the longest prefix available.
MomentSequence pm_subsample(const MomentSequence& a, int k,
                            std::optional<std::size_t> length = std::nullopt);

/// Zeroes odd moments: the symmetrization of X by a fair random sign.
MomentSequence pm_reflect(const MomentSequence& a);

/// a'_{2k} = a_k, odd entries zero: moments of ±sqrt(X) for X >= 0.
MomentSequence pm_sqrt_symmetrize(const MomentSequence& a);

struct CatalogEntry {
  std::string key;
  std::string formula;
  std::string parameter;  // empty if the entry takes no parameter
};

const std::vector<CatalogEntry>& catalog();

/// Builds a catalog sequence of the given length.
///
/// Keys: geometric(a), gaussian, catalan, factorial, log_kernel(k),
/// fib_shift, fib_ratio, fib_even, fib_odd, fib_scaled.
MomentSequence builtin(std::string_view key, std::span<const Rational> params, std::size_t length);

/// Parses "key" or "key:param" (e.g. "geometric:2", "log_kernel:1").
MomentSequence builtin(std::string_view spec, std::size_t length);

/// sum_{n=1}^{N} m_{2n}^{-1/(2n)}. Diagnostic only.
Real carleman_partial(const MomentSequence& m, int terms);

/// sum_{n<terms} t^n m_n / n!.
Real moment_gf_eval(const MomentSequence& m, const Rational& t, int terms);

}  // namespace poslab

#endif  // POSLAB_MOMENTLAB_HPP
