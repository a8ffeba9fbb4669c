#ifndef POSLAB_POSITIVITY_HPP
#define POSLAB_POSITIVITY_HPP

// Positivity of orthogonal series sum_n c_n p_n(x).
//
// The series sums to a nonnegative function exactly when c_n p^_n are the
// integrals of p_n against a nonnegative measure nu (the "recovered measure").
// Inverting the triangular relation c_n p^_n = sum_j pi_{n,j} M_j yields the
// moments M_j of nu, which are then put through the Hankel tests. At finite
// order this can refute positivity outright, or certify that every tested
// necessary condition holds.

#include "poslab/momentlab.hpp"
#include "poslab/orthopoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace poslab {

struct SeriesSpec {
  SeriesSpec(OrthoBasis basis, std::vector<Rational> coeffs);

  OrthoBasis basis;
  std::vector<Rational> coeffs;  // c_0..c_N, N <= basis.order()
};

enum class Verdict { certified, refuted, degenerate };

const char* to_string(Verdict v);

struct PositivityCertificate {
  MomentSequence recovered_moments;
  PmReport pm_report;
  Verdict verdict = Verdict::certified;
  /// certified: tested order; refuted/degenerate: the offending order.
  int verdict_order = 0;
  std::vector<Real> rm_partials;
  std::vector<std::string> notes;
};

/// M_0..M_N (N = basis order) solving sum_{j<=n} pi_{n,j} M_j = c_n p^_n, with c_n = 0 past the given coefficients.
MomentSequence measure_moments_from_coefficients(const SeriesSpec& spec);

/// c_n = (sum_j pi_{n,j} M_j) / p^_n for n = 0..basis order. Needs one
/// moment per basis order.
std::vector<Rational> coefficients_from_measure(const OrthoBasis& basis, const MomentSequence& nu_moments);

PositivityCertificate certify_positive(const SeriesSpec& spec, int order);

/// Partial sums S_0..S_N of sum c_n^2 p^_n log^2(n+1), natural log.
std::vector<Real> rm_diagnostic(const SeriesSpec& spec, int terms);

/// Same partial sums from the per-term energies c_n^2 p^_n directly; useful
/// when the coefficients themselves are irrational (orthonormal frames).
std::vector<Real> rm_partials(const std::vector<Real>& energies);

struct Projection {
  Polynomial image;
  bool lossy = false;
};

/// sum_{i<=order} p_i <p_i, f> / p^_i with inner products taken through the
/// source moments. Exact identity whenever deg f <= order.
Projection kernel_projection_check(const OrthoBasis& basis, const Polynomial& f, int order);

}  // namespace poslab

#endif  // POSLAB_POSITIVITY_HPP
