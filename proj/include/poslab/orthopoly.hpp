#ifndef POSLAB_ORTHOPOLY_HPP
#define POSLAB_ORTHOPOLY_HPP

// Orthogonal polynomial families built from moment sequences.
//
// Canonical bases are monic. The orthonormal family is a derived view: each
// member is carried as (monic polynomial, squared norm) and never multiplied
// out, because 1/sqrt(norm) is usually irrational.

#include "poslab/momentlab.hpp"
#include "poslab/polynomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace poslab {

/// p_{n+1}(x) = (a x + b) p_n(x) - c p_{n-1}(x)
struct RecurrenceTriple {
  Rational a;
  Rational b;
  Rational c;

  friend bool operator==(const RecurrenceTriple&, const RecurrenceTriple&) = default;
};

/// A polynomial divided by sqrt(norm).
struct ScaledPolynomial {
  Polynomial base;
  Rational norm;
};

class OrthoBasis {
 public:
  /// Checks deg(polys[n]) = n, positive norms, and that the family obeys a
  /// three-term recurrence with c_n a_n a_{n-1} > 0.
  OrthoBasis(std::vector<Polynomial> polys, std::vector<Rational> norms, MomentSequence source,
             std::string status = {});

  /// Highest polynomial degree N.
  int order() const { return static_cast<int>(polys_.size()) - 1; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  const Polynomial& poly(int n) const { return polys_.at(static_cast<std::size_t>(n)); }
  /// Lower-triangular coefficient matrix: pi(n, j) is the x^j coefficient of p_n.
  const RationalMatrix& pi() const { return pi_; }
  const std::vector<Rational>& norms() const { return norms_; }
  /// Triples for n = 0..N-1 (c_0 = 0 by the convention p_{-1} = 0).
  const std::vector<RecurrenceTriple>& recurrence() const { return recurrence_; }
  const MomentSequence& source_moments() const { return source_; }
  /// Empty for a complete construction; otherwise why it stopped early.
  const std::string& status() const { return status_; }
  const std::string& label() const { return source_.label(); }

  ScaledPolynomial orthonormal(int n) const;
  OrthoBasis truncated(int order) const;

 private:
  std::vector<Polynomial> polys_;
  RationalMatrix pi_;
  std::vector<Rational> norms_;
  std::vector<RecurrenceTriple> recurrence_;
  MomentSequence source_;
  std::string status_;
};

/// Lower-triangular gamma with from.p_n = sum_j gamma(n, j) to.p_j.
struct ConnectionMatrix {
  RationalMatrix gamma;
  std::string from_label;
  std::string to_label;

  int order() const { return static_cast<int>(gamma.rows()) - 1; }
  const Rational& gamma0(int n) const { return gamma(n, 0); }
};

/// sum_{j,k} p_j q_k m_{j+k}
Rational moment_inner(const Polynomial& p, const Polynomial& q, const MomentSequence& m);

/// Monic orthogonal polynomials of orders 0..N by Gram-Schmidt on the
/// monomials under the moment bilinear form. Stops (with a status message) at
/// the first vanishing Hankel determinant; throws DegenerateMeasure on a
/// negative one.
OrthoBasis opoly_from_moments(const MomentSequence& m, int order);

/// The classical determinant representation: det of the Hankel rows
/// m_i..m_{i+n} (i < n) over the row (1, x, ..., x^n). Leading coefficient is
/// d_{n-1}. Used as an independent check of opoly_from_moments.
Polynomial determinant_form_polynomial(const MomentSequence& m, int n);

/// Squared norms recomputed from the source moments.
std::vector<Rational> norms(const OrthoBasis& basis);

std::vector<RecurrenceTriple> three_term(const OrthoBasis& basis);

/// Extracts exact recurrence triples; throws RecurrenceInconsistency if the
/// sequence is not a three-term family.
std::vector<RecurrenceTriple> three_term(std::span<const Polynomial> polys);

/// Rebuilds p_0..p_{triples.size()} from p_0 and the triples.
std::vector<Polynomial> synthesize(const Rational& p0, std::span<const RecurrenceTriple> triples);

ConnectionMatrix connection(const OrthoBasis& from, const OrthoBasis& to);

/// Expansion coefficients of p in the basis (triangular solve).
RationalVector expand_in_basis(const Polynomial& p, const OrthoBasis& basis);

/// Probabilists' Hermite polynomials H_0..H_N from the recurrence
/// H_{n+1} = x H_n - n H_{n-1}, with norms n! under the standard normal.
OrthoBasis hermite(int order);

/// H_n(x) = n! sum_m (-1)^m x^{n-2m} / (2^m m! (n-2m)!)
Polynomial hermite_explicit(int n);

}  // namespace poslab

#endif  // POSLAB_ORTHOPOLY_HPP
