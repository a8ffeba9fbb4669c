#ifndef POSLAB_LANCASTER_HPP
#define POSLAB_LANCASTER_HPP

// Bivariate expansions sum_n c_n alpha_n(x) beta_n(y) over two orthonormal
// families.
//
// The series is a nonnegative function iff, for almost every y, the numbers
// m_n^(a)(y) defined by sum_j a_{n,j} m_j^(a)(y) = c_n beta_n(y) form the
// moments of a nonnegative measure (and symmetrically in x). Those conditional
// moments are polynomials in the conditioning variable; they are produced
// here exactly and then Hankel-tested at rational grid points.
//
// Both families are supplied as monic OrthoBasis objects. Writing
// a_{n,j} = pi^a_{n,j} / sqrt(|alpha_n|^2), the recursion only ever involves
// kappa_n = c_n sqrt(|alpha_n|^2 / |beta_n|^2), which is rational when the
// norm ratio is a perfect square (always when alpha = beta). Otherwise each
// moment polynomial is kept as a sum of rational polynomials tagged with
// square roots.

#include "poslab/momentlab.hpp"
#include "poslab/orthopoly.hpp"
#include "poslab/positivity.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace poslab {

struct SupportFlags {
  bool zero_in_supp_mu = false;
  bool mu_unbounded = false;
  bool nu_unbounded = false;
  bool same_marginals = false;
};

struct LancasterProblem {
  LancasterProblem(OrthoBasis alpha, OrthoBasis beta, std::vector<Rational> coeffs, SupportFlags support = {});

  OrthoBasis alpha;  // family of mu, variable x
  OrthoBasis beta;   // family of nu, variable y
  std::vector<Rational> coeffs;
  SupportFlags support;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  LancasterProblem swapped() const;
};

/// sum_k sqrt(radicand_k) * part_k with distinct, square-free-reduced
/// radicands. A purely rational polynomial has the single radicand 1.
class SurdPolynomial {
 public:
  SurdPolynomial() = default;
  explicit SurdPolynomial(Polynomial rational_part);

  /// Adds sqrt(radicand) * part; radicand must be positive.
  void add(const Rational& radicand, const Polynomial& part);
  SurdPolynomial& operator+=(const SurdPolynomial& other);
  SurdPolynomial& operator*=(const Rational& s);

  bool is_rational() const;
  /// The polynomial itself; throws if an irrational term remains.
  Polynomial rational() const;
  const std::vector<std::pair<Rational, Polynomial>>& terms() const { return terms_; }
  int degree() const;
  Real eval(const Real& x) const;

 private:
  std::vector<std::pair<Rational, Polynomial>> terms_;
};

struct MomentPolynomials {
  std::vector<SurdPolynomial> ma;  // m_n^(a)(y)
  std::vector<SurdPolynomial> mb;  // m_n^(b)(x)

  bool exact() const;
};

struct GridVerdict {
  Rational point;
  MomentSequence moments;
  PmReport pm;
};

struct OriginSum {
  bool applicable = false;
  std::optional<Rational> exact;  // set when every term is rational
  Real value = 0;
  int sign = 0;
};

struct CorollaryChecks {
  std::vector<Rational> sum_c2_partials;  // (a)
  OriginSum origin_sum;                   // (b), needs 0 in supp mu
  std::optional<PmReport> c_ratio_pm;     // (c), needs unbounded supp mu
  std::optional<PmReport> c_pm;           // (d), needs mu = nu unbounded
  std::vector<std::string> notes;
};

struct PcFlag {
  int n = 0;
  bool full_order = false;  // deg h_n = n with nonzero beta_n component
  bool diagonal = false;    // all components below n vanish as well
  RationalVector components;
};

struct LancasterReport {
  MomentPolynomials moment_polys;
  std::vector<GridVerdict> grid_a;  // m^(a) at points y
  std::vector<GridVerdict> grid_b;  // m^(b) at points x
  CorollaryChecks corollary;
  std::vector<PcFlag> pc_check;
  Verdict verdict = Verdict::certified;
  int tested_order = 0;
  std::vector<std::string> notes;
};

MomentPolynomials lancaster_moment_polys(const LancasterProblem& prob);

/// {-2, -3/2, ..., 2}
std::vector<Rational> default_grid();

/// Evaluates the conditional moment polynomials at every grid point and runs
/// the Hankel tests to the given order; grid points are processed
/// concurrently, the report does not depend on scheduling.
LancasterReport lancaster_check(const LancasterProblem& prob, const std::vector<Rational>& grid_a,
                                const std::vector<Rational>& grid_b, int order);

/// Necessary conditions on c_n; K is the highest index summed or tested.
CorollaryChecks corollary_checks(const LancasterProblem& prob, int K);

/// Expands each h_n in the beta basis and checks it has full order n.
std::vector<PcFlag> pc_full_order_check(const std::vector<Polynomial>& h, const OrthoBasis& beta);

/// Candidate coefficient sequences for Lancaster expansions:
/// "geometric:rho", "log_kernel:k", "catalan_quarter" (C(2n,n)/((n+1)4^n)),
/// "fib_scaled" (F_{n+1}/3^n).
std::vector<Rational> lancaster_candidate(std::string_view key, std::size_t length);

}  // namespace poslab

#endif  // POSLAB_LANCASTER_HPP
