#include "poslab/positivity.hpp"

#include "poslab/error.hpp"

namespace poslab {

SeriesSpec::SeriesSpec(OrthoBasis basis_, std::vector<Rational> coeffs_)
    : basis(std::move(basis_)), coeffs(std::move(coeffs_)) {
  if (coeffs.empty()) throw InvalidArgument("series needs at least c_0");
  if (static_cast<int>(coeffs.size()) > basis.order() + 1) {
    throw InsufficientMoments(coeffs.size(), static_cast<std::size_t>(basis.order() + 1));
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return "certified";
    case Verdict::refuted:
      return "refuted";
    case Verdict::degenerate:
      return "degenerate";
  }
  return "unknown";
}

MomentSequence measure_moments_from_coefficients(const SeriesSpec& spec) {
  const RationalMatrix& pi = spec.basis.pi();
  const auto& norms = spec.basis.norms();
  // Omitted trailing coefficients are zero, so the recovery runs to the basis order.
  std::vector<Rational> moments(static_cast<std::size_t>(spec.basis.order()) + 1);
  // Forward substitution on the lower-triangular pi.
  for (std::size_t n = 0; n < moments.size(); ++n) {
    const auto row = static_cast<Eigen::Index>(n);
    Rational rhs = n < spec.coeffs.size() ? Rational(spec.coeffs[n] * norms[n]) : Rational(0);
    for (std::size_t j = 0; j < n; ++j) rhs -= pi(row, static_cast<Eigen::Index>(j)) * moments[j];
    moments[n] = rhs / pi(row, row);
  }
  return MomentSequence(std::move(moments), "recovered");
}

std::vector<Rational> coefficients_from_measure(const OrthoBasis& basis, const MomentSequence& nu_moments) {
  const std::size_t count = static_cast<std::size_t>(basis.order()) + 1;
  if (nu_moments.size() < count) throw InsufficientMoments(count, nu_moments.size());
  std::vector<Rational> coeffs(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      acc += basis.pi()(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(j)) * nu_moments[j];
    }
    coeffs[n] = acc / basis.norms()[n];
  }
  return coeffs;
}

PositivityCertificate certify_positive(const SeriesSpec& spec, int order) {
  MomentSequence recovered = measure_moments_from_coefficients(spec);
  PmReport report = is_pm(recovered, order);

  PositivityCertificate cert{std::move(recovered), std::move(report), Verdict::certified, 0, {}, {}};
  const PmReport& pm = cert.pm_report;
  if (auto neg = pm.first_negative()) {
    cert.verdict = Verdict::refuted;
    cert.verdict_order = *neg;
    cert.notes.push_back("Hankel determinant of the recovered moments is negative at order " +
                         std::to_string(*neg) + ": the series cannot sum to a nonnegative function");
  } else if (auto zero = pm.first_zero()) {
    cert.verdict = Verdict::degenerate;
    cert.verdict_order = *zero;
    cert.notes.push_back("Hankel determinant vanishes at order " + std::to_string(*zero) +
                         ": recovered measure may have finite support");
  } else {
    cert.verdict = Verdict::certified;
    cert.verdict_order = order;
    cert.notes.push_back("all Hankel determinants positive through order " + std::to_string(order) +
                         "; evidence is limited to the tested order");
  }
  cert.rm_partials = rm_diagnostic(spec, static_cast<int>(spec.coeffs.size()) - 1);
  return cert;
}

std::vector<Real> rm_partials(const std::vector<Real>& energies) {
  std::vector<Real> out;
  out.reserve(energies.size());
  Real sum = 0;
  for (std::size_t n = 0; n < energies.size(); ++n) {
    const Real lg = boost::multiprecision::log(Real(n + 1));
    sum += energies[n] * lg * lg;
    out.push_back(sum);
  }
  return out;
}

std::vector<Real> rm_diagnostic(const SeriesSpec& spec, int terms) {
  if (terms < 0) throw InvalidArgument("negative term count");
  std::vector<Real> energies(static_cast<std::size_t>(terms) + 1, Real(0));
  for (std::size_t n = 0; n < energies.size() && n < spec.coeffs.size(); ++n) {
    energies[n] = to_real(spec.coeffs[n] * spec.coeffs[n] * spec.basis.norms()[n]);
  }
  return rm_partials(energies);
}

Projection kernel_projection_check(const OrthoBasis& basis, const Polynomial& f, int order) {
  if (order < 0 || order > basis.order()) {
    throw InvalidArgument("projection order " + std::to_string(order) + " outside basis order " +
                          std::to_string(basis.order()));
  }
  Projection out;
  out.lossy = f.degree() > order;
  for (int i = 0; i <= order; ++i) {
    const Polynomial& p = basis.poly(i);
    const Rational weight =
        moment_inner(p, f, basis.source_moments()) / basis.norms()[static_cast<std::size_t>(i)];
    out.image += weight * p;
  }
  return out;
}

}  // namespace poslab
