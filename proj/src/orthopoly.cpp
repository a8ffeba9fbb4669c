#include "poslab/orthopoly.hpp"

#include "poslab/bareiss.hpp"
#include "poslab/error.hpp"

namespace poslab {

namespace {

RationalMatrix coefficient_matrix(const std::vector<Polynomial>& polys) {
  const auto n = static_cast<Eigen::Index>(polys.size());
  RationalMatrix pi = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int j = 0; j <= polys[static_cast<std::size_t>(i)].degree(); ++j) {
      pi(i, j) = polys[static_cast<std::size_t>(i)].coeff(j);
    }
  }
  return pi;
}

}  // namespace

OrthoBasis::OrthoBasis(std::vector<Polynomial> polys, std::vector<Rational> norms, MomentSequence source,
                       std::string status)
    : polys_(std::move(polys)), norms_(std::move(norms)), source_(std::move(source)), status_(std::move(status)) {
  if (polys_.empty()) throw InvalidArgument("orthogonal basis needs at least p_0");
  if (norms_.size() != polys_.size()) throw LengthMismatch(polys_.size(), norms_.size());
  for (std::size_t n = 0; n < polys_.size(); ++n) {
    if (polys_[n].degree() != static_cast<int>(n)) {
      throw InvalidArgument("p_" + std::to_string(n) + " has degree " + std::to_string(polys_[n].degree()) +
                            ", expected " + std::to_string(n));
    }
    if (norms_[n] <= 0) {
      throw InvalidArgument("squared norm of p_" + std::to_string(n) + " is not positive: " +
                            format_rational(norms_[n]));
    }
  }
  pi_ = coefficient_matrix(polys_);
  recurrence_ = three_term(polys_);
}

ScaledPolynomial OrthoBasis::orthonormal(int n) const {
  return {poly(n), norms_.at(static_cast<std::size_t>(n))};
}

OrthoBasis OrthoBasis::truncated(int order) const {
  if (order < 0 || order > this->order()) throw InvalidArgument("truncation order out of range");
  const auto len = static_cast<std::ptrdiff_t>(order) + 1;
  return OrthoBasis({polys_.begin(), polys_.begin() + len}, {norms_.begin(), norms_.begin() + len}, source_);
}

Rational moment_inner(const Polynomial& p, const Polynomial& q, const MomentSequence& m) {
  if (p.is_zero() || q.is_zero()) return Rational(0);
  const std::size_t needed = static_cast<std::size_t>(p.degree() + q.degree() + 1);
  if (needed > m.size()) throw InsufficientMoments(needed, m.size());
  Rational acc = 0;
  for (int j = 0; j <= p.degree(); ++j) {
    if (p.coeff(j) == 0) continue;
    for (int k = 0; k <= q.degree(); ++k) acc += p.coeff(j) * q.coeff(k) * m[static_cast<std::size_t>(j + k)];
  }
  return acc;
}

OrthoBasis opoly_from_moments(const MomentSequence& m, int order) {
  if (order < 0) throw InvalidArgument("negative basis order");
  const std::size_t needed = static_cast<std::size_t>(2 * order + 1);
  if (needed > m.size()) throw InsufficientMoments(needed, m.size());

  std::vector<Polynomial> polys;
  std::vector<Rational> norms;
  std::string status;
  for (int n = 0; n <= order; ++n) {
    const Polynomial xn = Polynomial::monomial(n);
    Polynomial p = xn;
    for (int k = 0; k < n; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      p -= (moment_inner(xn, polys[ku], m) / norms[ku]) * polys[ku];
    }
    // p_n is orthogonal to everything of lower degree, so <p_n, p_n> = <p_n, x^n>.
    const Rational norm = moment_inner(p, xn, m);
    if (norm < 0) throw DegenerateMeasure(n, "negative Hankel determinant ratio " + format_rational(norm));
    if (norm == 0) {
      if (n == 0) throw DegenerateMeasure(0, "m_0 = 0");
      status = "Hankel determinant d_" + std::to_string(n) +
               " vanishes: finite support possible; basis truncated at order " + std::to_string(n - 1);
      break;
    }
    polys.push_back(std::move(p));
    norms.push_back(norm);
  }
  return OrthoBasis(std::move(polys), std::move(norms), m, std::move(status));
}

Polynomial determinant_form_polynomial(const MomentSequence& m, int n) {
  if (n == 0) return Polynomial::constant(1);
  const RationalMatrix rows = hankel_matrix(m, n).topRows(n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  // Cofactor expansion along the last row (1, x, ..., x^n).
  for (int j = 0; j <= n; ++j) {
    RationalMatrix minor(n, n);
    for (int c = 0, dst = 0; c <= n; ++c) {
      if (c == j) continue;
      minor.col(dst++) = rows.col(c);
    }
    const Rational cof = bareiss_determinant(minor);
    coeffs[static_cast<std::size_t>(j)] = ((n + j) % 2 == 0) ? cof : Rational(-cof);
  }
  return Polynomial(std::move(coeffs));
}

std::vector<Rational> norms(const OrthoBasis& basis) {
  std::vector<Rational> out;
  out.reserve(basis.polys().size());
  for (const auto& p : basis.polys()) out.push_back(moment_inner(p, p, basis.source_moments()));
  return out;
}

std::vector<RecurrenceTriple> three_term(const OrthoBasis& basis) { return basis.recurrence(); }

std::vector<RecurrenceTriple> three_term(std::span<const Polynomial> polys) {
  std::vector<RecurrenceTriple> out;
  for (std::size_t n = 0; n + 1 < polys.size(); ++n) {
    const Polynomial& cur = polys[n];
    const Polynomial& next = polys[n + 1];
    const int deg = static_cast<int>(n);
    RecurrenceTriple t;
    t.a = next.leading() / cur.leading();
    Polynomial rest = next - t.a * cur.shifted(1);
    t.b = rest.coeff(deg) / cur.leading();
    rest -= t.b * cur;
    if (n == 0) {
      t.c = 0;
    } else {
      const Polynomial& prev = polys[n - 1];
      t.c = -rest.coeff(deg - 1) / prev.leading();
      rest += t.c * prev;
    }
    if (!rest.is_zero()) {
      throw RecurrenceInconsistency("p_" + std::to_string(n + 1) + " is not (a x + b) p_" + std::to_string(n) +
                                    " - c p_" + std::to_string(deg - 1) + "; residual " + rest.str());
    }
    if (n > 0 && t.c * t.a * out.back().a <= 0) {
      throw RecurrenceInconsistency("c_n a_n a_{n-1} is not positive at n = " + std::to_string(n));
    }
    out.push_back(t);
  }
  return out;
}

std::vector<Polynomial> synthesize(const Rational& p0, std::span<const RecurrenceTriple> triples) {
  std::vector<Polynomial> out{Polynomial::constant(p0)};
  Polynomial prev;
  for (const auto& t : triples) {
    const Polynomial& cur = out.back();
    Polynomial next = t.a * cur.shifted(1) + t.b * cur - t.c * prev;
    prev = cur;
    out.push_back(std::move(next));
  }
  return out;
}

ConnectionMatrix connection(const OrthoBasis& from, const OrthoBasis& to) {
  const int n = std::min(from.order(), to.order()) + 1;
  const RationalMatrix p = from.pi().topLeftCorner(n, n);
  const RationalMatrix r = to.pi().topLeftCorner(n, n);
  // gamma * r = p with r lower triangular and nonsingular.
  RationalMatrix gamma = r.triangularView<Eigen::Lower>().solve<Eigen::OnTheRight>(p);
  return {std::move(gamma), from.label(), to.label()};
}

RationalVector expand_in_basis(const Polynomial& p, const OrthoBasis& basis) {
  if (p.degree() > basis.order()) {
    throw InsufficientMoments(static_cast<std::size_t>(p.degree() + 1), static_cast<std::size_t>(basis.order() + 1));
  }
  const int n = std::max(p.degree(), 0) + 1;
  RationalVector coeffs(n);
  for (int j = 0; j < n; ++j) coeffs(j) = p.coeff(j);
  const RationalMatrix r = basis.pi().topLeftCorner(n, n);
  // p = sum_k g_k r_k  <=>  coeffs^T = g^T r
  RationalVector g = r.transpose().triangularView<Eigen::Upper>().solve(coeffs);
  return g;
}

OrthoBasis hermite(int order) {
  if (order < 0) throw InvalidArgument("negative basis order");
  std::vector<Polynomial> polys{Polynomial::constant(1)};
  std::vector<Rational> norms{Rational(1)};
  Polynomial prev;
  for (int n = 0; n < order; ++n) {
    const Polynomial& cur = polys.back();
    Polynomial next = cur.shifted(1) - Rational(n) * prev;
    prev = cur;
    polys.push_back(std::move(next));
    norms.push_back(factorial(n + 1));
  }
  return OrthoBasis(std::move(polys), std::move(norms), builtin("gaussian", 2 * static_cast<std::size_t>(order) + 1)
                                                            .relabeled("hermite"));
}

Polynomial hermite_explicit(int n) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  const Rational nf = factorial(n);
  for (int m = 0; 2 * m <= n; ++m) {
    Rational term = nf / (power(Rational(2), m) * factorial(m) * factorial(n - 2 * m));
    coeffs[static_cast<std::size_t>(n - 2 * m)] = (m % 2 == 0) ? term : Rational(-term);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace poslab
