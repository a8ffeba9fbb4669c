#include "poslab/mehler.hpp"

#include "poslab/error.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace poslab {

namespace {

void require_correlation(const Rational& rho) {
  if (abs(rho) >= 1) throw InvalidArgument("correlation must satisfy |rho| < 1, got " + format_rational(rho));
}

}  // namespace

std::vector<Polynomial> mehler_moments(const Rational& rho, int order) {
  require_correlation(rho);
  if (order < 0) throw InvalidArgument("negative order");
  const Rational variance = 1 - rho * rho;
  std::vector<Polynomial> out;
  for (int n = 0; n <= order; ++n) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int j = 0; 2 * j <= n; ++j) {
      coeffs[static_cast<std::size_t>(n - 2 * j)] =
          binomial(n, 2 * j) * power(variance, j) * double_factorial(2 * j - 1) * power(rho, n - 2 * j);
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

Real mehler_density(const Real& x, const Real& y, const Rational& rho) {
  require_correlation(rho);
  const Real r = to_real(rho);
  const Real variance = 1 - r * r;
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  const Real diff = x - r * y;
  return boost::multiprecision::exp(-diff * diff / (2 * variance)) / boost::multiprecision::sqrt(two_pi * variance);
}

Real mehler_kernel_truncated(const Real& x, const Real& y, const Rational& rho, int order) {
  if (order < 0) throw InvalidArgument("negative order");
  const Real r = to_real(rho);
  Real hx_prev = 0, hx = 1, hy_prev = 0, hy = 1;
  Real weight = 1;  // rho^n / n!
  Real sum = 0;
  for (int n = 0; n <= order; ++n) {
    sum += weight * hx * hy;
    const Real hx_next = x * hx - n * hx_prev;
    const Real hy_next = y * hy - n * hy_prev;
    hx_prev = hx;
    hx = hx_next;
    hy_prev = hy;
    hy = hy_next;
    weight *= r / (n + 1);
  }
  return sum;
}

LancasterProblem hermite_mehler_problem(const Rational& rho, int order) {
  require_correlation(rho);
  const OrthoBasis h = hermite(order);
  std::vector<Rational> c;
  for (int n = 0; n <= order; ++n) c.push_back(power(rho, n));
  SupportFlags flags;
  flags.zero_in_supp_mu = true;
  flags.mu_unbounded = true;
  flags.nu_unbounded = true;
  flags.same_marginals = true;
  return LancasterProblem(h, h, std::move(c), flags);
}

std::vector<Rational> mehler_series_coefficients(const Rational& rho, const Rational& y, int order) {
  require_correlation(rho);
  const OrthoBasis h = hermite(order);
  std::vector<Rational> c;
  for (int n = 0; n <= order; ++n) c.push_back(power(rho, n) * h.poly(n).eval(y) / factorial(n));
  return c;
}

// ---------------------------------------------------------------------------

namespace {

CheckResult check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

// Coefficient of t^n in exp(A t + B t^2) with A = rho y and B = (1 - rho^2)/2.
Polynomial gf_coefficient(const Rational& rho, int n) {
  const Rational b = (1 - rho * rho) / 2;
  Polynomial out;
  for (int k = 0; 2 * k <= n; ++k) {
    const int d = n - 2 * k;
    out += Polynomial::monomial(d, power(rho, d) * power(b, k) / (factorial(d) * factorial(k)));
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_mehler_battery(const Rational& rho, int order) {
  require_correlation(rho);
  if (order < 2) throw InvalidArgument("Mehler battery needs order >= 2");
  std::vector<CheckResult> results;
  const OrthoBasis h = hermite(order);
  const auto closed = mehler_moments(rho, order);

  {
    const OrthoBasis built = opoly_from_moments(builtin("gaussian", 2 * static_cast<std::size_t>(order) + 1), order);
    bool ok = built.polys() == h.polys();
    for (int n = 0; n <= order && ok; ++n) {
      ok = built.norms()[static_cast<std::size_t>(n)] == factorial(n) &&
           (n == order || built.recurrence()[static_cast<std::size_t>(n)] == RecurrenceTriple{1, 0, n});
    }
    results.push_back(check("hermite from gaussian moments", ok));
  }
  {
    bool ok = true;
    for (int n = 0; n <= order && ok; ++n) ok = hermite_explicit(n) == h.poly(n);
    results.push_back(check("explicit hermite sum", ok));
  }
  {
    bool ok = true;
    for (int k = 0; 2 * k <= order && ok; ++k) {
      const Rational expected = (k % 2 ? Rational(-1) : Rational(1)) * factorial(2 * k) /
                                (power(Rational(2), k) * factorial(k));
      ok = eval_poly(h.poly(2 * k), 0) == expected && (2 * k + 1 > order || eval_poly(h.poly(2 * k + 1), 0) == 0);
    }
    results.push_back(check("hermite values at 0", ok));
  }
  {
    const auto polys = lancaster_moment_polys(hermite_mehler_problem(rho, order));
    bool ok = polys.exact();
    for (int n = 0; n <= order && ok; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      ok = polys.ma[idx].rational() == closed[idx] && polys.mb[idx].rational() == closed[idx];
    }
    results.push_back(check("recursion equals closed-form conditional moments", ok));
  }
  {
    bool ok = true;
    for (int n = 0; n <= order && ok; ++n) {
      Polynomial lhs;
      for (int j = 0; j <= n; ++j) lhs += h.pi()(n, j) * closed[static_cast<std::size_t>(j)];
      ok = lhs == power(rho, n) * h.poly(n);
    }
    results.push_back(check("integral of H_n against conditional law is rho^n H_n(y)", ok));
  }
  {
    bool ok = true;
    for (int n = 0; n <= order && ok; ++n) ok = factorial(n) * gf_coefficient(rho, n) == closed[static_cast<std::size_t>(n)];
    results.push_back(check("moment generating function coefficients", ok));
  }
  {
    // Enough terms that the kernel tail is far below the tolerance.
    const double r = std::abs(to_real(rho).convert_to<double>());
    const int terms = r == 0 ? 1 : static_cast<int>(std::ceil(std::log(1e-16) / std::log(r))) + 30;
    Real worst = 0;
    for (int xi = -2; xi <= 2; ++xi) {
      for (int yi = -2; yi <= 2; ++yi) {
        const Real x = xi, y = yi;
        const Real oracle = mehler_density(x, y, rho) * boost::multiprecision::sqrt(2 * boost::math::constants::pi<Real>()) *
                            boost::multiprecision::exp(x * x / 2);
        worst = std::max(worst, Real(boost::multiprecision::abs(mehler_kernel_truncated(x, y, rho, terms) - oracle)));
      }
    }
    results.push_back(check("kernel matches density ratio on grid", worst <= Real("1e-8"),
                            "max deviation " + format_real(worst, 6) + " with " + std::to_string(terms) + " terms"));
  }
  const int pm_order = std::min(4, order / 2);
  {
    bool ok = true;
    std::string detail;
    for (int yi = -2; yi <= 2 && ok; ++yi) {
      const SeriesSpec spec(h, mehler_series_coefficients(rho, Rational(yi), 2 * pm_order));
      const auto cert = certify_positive(spec, pm_order);
      ok = cert.verdict == Verdict::certified && cert.pm_report.strictly_positive;
      if (!ok) detail = "failed at y = " + std::to_string(yi);
    }
    results.push_back(check("series certified positive for y in {-2..2}", ok, detail));
  }
  {
    const auto report = lancaster_check(hermite_mehler_problem(rho, order), default_grid(), default_grid(), pm_order);
    results.push_back(check("bivariate grid certification", report.verdict == Verdict::certified,
                            "order " + std::to_string(pm_order) + ", " + std::to_string(report.grid_a.size()) +
                                " points per side"));
  }
  {
    const auto prob = hermite_mehler_problem(rho, order);
    const auto cor = corollary_checks(prob, order);
    const Rational bound = 1 / (1 - rho * rho);
    bool a_ok = true;
    for (const auto& s : cor.sum_c2_partials) a_ok = a_ok && s <= bound;
    results.push_back(check("(a) sum c_n^2 bounded by 1/(1-rho^2)", a_ok));

    // Terms are rho^{2k} C(2k,k)/4^k <= rho^{2k}; bound the tail accordingly.
    const Real limit = 1 / boost::multiprecision::sqrt(1 - to_real(rho * rho));
    const int k0 = order / 2 + 1;
    const Real tail = to_real(power(rho * rho, k0) / (1 - rho * rho));
    const Real err = boost::multiprecision::abs(cor.origin_sum.value - limit);
    results.push_back(check("(b) origin sum positive and near (1-rho^2)^(-1/2)",
                            cor.origin_sum.sign > 0 && err <= tail,
                            "error " + format_real(err, 6) + ", tail bound " + format_real(tail, 6)));

    bool cd_ok = cor.c_ratio_pm && cor.c_pm && cor.c_ratio_pm->is_pm() && cor.c_pm->is_pm();
    if (cd_ok) {
      for (std::size_t n = 1; n < cor.c_pm->hankel_dets.size(); ++n) cd_ok = cd_ok && cor.c_pm->hankel_dets[n] == 0;
    }
    results.push_back(check("(c)/(d) rho^n is a point-mass moment sequence", cd_ok));
  }
  {
    std::vector<Polynomial> hn;
    for (int n = 0; n <= order; ++n) hn.push_back(power(rho, n) * h.poly(n));
    bool ok = true;
    for (const auto& f : pc_full_order_check(hn, h)) ok = ok && (rho == 0 ? f.n == 0 || !f.full_order : f.full_order);
    results.push_back(check("full-order conditional expectations", ok));
  }
  return results;
}

}  // namespace poslab
