#include "poslab/lancaster.hpp"

#include "poslab/error.hpp"

#include <algorithm>
#include <future>

namespace poslab {

LancasterProblem::LancasterProblem(OrthoBasis alpha_, OrthoBasis beta_, std::vector<Rational> coeffs_,
                                   SupportFlags support_)
    : alpha(std::move(alpha_)), beta(std::move(beta_)), coeffs(std::move(coeffs_)), support(support_) {
  if (coeffs.empty()) throw InvalidArgument("Lancaster problem needs at least c_0");
  const int n = order();
  if (alpha.order() < n || beta.order() < n) {
    throw InsufficientMoments(static_cast<std::size_t>(n + 1),
                              static_cast<std::size_t>(std::min(alpha.order(), beta.order()) + 1));
  }
}

LancasterProblem LancasterProblem::swapped() const {
  SupportFlags flipped = support;
  std::swap(flipped.mu_unbounded, flipped.nu_unbounded);
  // zero_in_supp_mu is a statement about mu only; after the swap it is unknown.
  flipped.zero_in_supp_mu = support.same_marginals && support.zero_in_supp_mu;
  return LancasterProblem(beta, alpha, coeffs, flipped);
}

// ---------------------------------------------------------------------------
// SurdPolynomial

namespace {

// sqrt(p/q) = f * sqrt(t) with integer t free of small square factors.
std::pair<Rational, Rational> reduce_radicand(const Rational& r) {
  if (auto root = exact_sqrt(r)) return {Rational(1), *root};
  Integer s = numerator(r) * denominator(r);
  Integer f = 1;
  for (unsigned long p = 2; p < 100000; ++p) {
    const Integer p2 = Integer(p) * p;
    if (p2 > s) break;
    while (s % p2 == 0) {
      s /= p2;
      f *= p;
    }
  }
  if (auto root = exact_sqrt(Rational(s))) {
    f *= numerator(*root);
    s = 1;
  }
  return {Rational(s), Rational(f, denominator(r))};
}

}  // namespace

SurdPolynomial::SurdPolynomial(Polynomial rational_part) {
  if (!rational_part.is_zero()) terms_.emplace_back(Rational(1), std::move(rational_part));
}

void SurdPolynomial::add(const Rational& radicand, const Polynomial& part) {
  if (radicand <= 0) throw InvalidArgument("radicand must be positive");
  if (part.is_zero()) return;
  const auto [tag, factor] = reduce_radicand(radicand);
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first == tag; });
  if (it == terms_.end()) {
    terms_.emplace_back(tag, factor * part);
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  } else {
    it->second += factor * part;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SurdPolynomial& SurdPolynomial::operator+=(const SurdPolynomial& other) {
  for (const auto& [tag, part] : other.terms_) add(tag, part);
  return *this;
}

SurdPolynomial& SurdPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

bool SurdPolynomial::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 1);
}

Polynomial SurdPolynomial::rational() const {
  if (!is_rational()) throw InvalidArgument("moment polynomial has an irrational square-root component");
  return terms_.empty() ? Polynomial{} : terms_.front().second;
}

int SurdPolynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.second.degree());
  return d;
}

Real SurdPolynomial::eval(const Real& x) const {
  Real acc = 0;
  for (const auto& [tag, part] : terms_) acc += boost::multiprecision::sqrt(to_real(tag)) * part.eval(x);
  return acc;
}

bool MomentPolynomials::exact() const {
  auto rational = [](const SurdPolynomial& p) { return p.is_rational(); };
  return std::all_of(ma.begin(), ma.end(), rational) && std::all_of(mb.begin(), mb.end(), rational);
}

// ---------------------------------------------------------------------------

namespace {

// m_n = [c_n sqrt(|a_n|^2/|b_n|^2) b_n(y) - sum_{j<n} pi^a_{n,j} m_j] / pi^a_{n,n}
std::vector<SurdPolynomial> conditional_moments(const OrthoBasis& a, const OrthoBasis& b,
                                                const std::vector<Rational>& coeffs) {
  std::vector<SurdPolynomial> m;
  m.reserve(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const auto row = static_cast<Eigen::Index>(n);
    SurdPolynomial acc;
    acc.add(a.norms()[n] / b.norms()[n], coeffs[n] * b.poly(static_cast<int>(n)));
    for (std::size_t j = 0; j < n; ++j) {
      SurdPolynomial prev = m[j];
      prev *= -a.pi()(row, static_cast<Eigen::Index>(j));
      acc += prev;
    }
    acc *= Rational(1) / a.pi()(row, row);
    m.push_back(std::move(acc));
  }
  return m;
}

std::vector<GridVerdict> evaluate_grid(const std::vector<SurdPolynomial>& polys, const std::vector<Rational>& grid,
                                       int order) {
  const std::size_t length = static_cast<std::size_t>(2 * order + 1);
  std::vector<Polynomial> exact;
  exact.reserve(length);
  for (std::size_t n = 0; n < length; ++n) exact.push_back(polys[n].rational());

  std::vector<std::future<GridVerdict>> tasks;
  tasks.reserve(grid.size());
  for (const auto& point : grid) {
    tasks.push_back(std::async(std::launch::async, [&exact, point, order]() {
      std::vector<Rational> values;
      values.reserve(exact.size());
      for (const auto& p : exact) values.push_back(p.eval(point));
      MomentSequence moments(std::move(values), "at " + format_rational(point));
      PmReport pm = is_pm(moments, order);
      return GridVerdict{point, std::move(moments), std::move(pm)};
    }));
  }
  std::vector<GridVerdict> out;
  out.reserve(tasks.size());
  for (auto& t : tasks) out.push_back(t.get());
  return out;
}

}  // namespace

MomentPolynomials lancaster_moment_polys(const LancasterProblem& prob) {
  return {conditional_moments(prob.alpha, prob.beta, prob.coeffs),
          conditional_moments(prob.beta, prob.alpha, prob.coeffs)};
}

std::vector<Rational> default_grid() {
  std::vector<Rational> grid;
  for (int k = -4; k <= 4; ++k) grid.emplace_back(k, 2);
  return grid;
}

LancasterReport lancaster_check(const LancasterProblem& prob, const std::vector<Rational>& grid_a,
                                const std::vector<Rational>& grid_b, int order) {
  if (order < 0) throw InvalidArgument("negative order");
  if (2 * order > prob.order()) {
    throw InsufficientMoments(static_cast<std::size_t>(2 * order + 1), static_cast<std::size_t>(prob.order() + 1));
  }

  LancasterReport report;
  report.tested_order = order;
  report.moment_polys = lancaster_moment_polys(prob);
  if (!report.moment_polys.exact()) {
    throw InvalidArgument(
        "norm ratios of the two families are not perfect squares; conditional moments are irrational and "
        "cannot be Hankel-tested exactly");
  }
  report.grid_a = evaluate_grid(report.moment_polys.ma, grid_a, order);
  report.grid_b = evaluate_grid(report.moment_polys.mb, grid_b, order);
  report.corollary = corollary_checks(prob, prob.order());

  std::vector<Polynomial> h;
  for (std::size_t n = 0; n < prob.coeffs.size(); ++n) h.push_back(prob.coeffs[n] * prob.beta.poly(static_cast<int>(n)));
  report.pc_check = pc_full_order_check(h, prob.beta);

  if (report.moment_polys.ma.front().rational() != Polynomial::constant(1) ||
      report.moment_polys.mb.front().rational() != Polynomial::constant(1)) {
    report.notes.push_back("m_0 is not identically 1: conditional measures are not normalized");
  }

  bool refuted = false;
  bool degenerate = false;
  auto scan = [&](const std::vector<GridVerdict>& grid, const char* side) {
    for (const auto& g : grid) {
      if (auto k = g.pm.first_negative()) {
        refuted = true;
        report.notes.push_back(std::string(side) + " at " + format_rational(g.point) +
                               ": negative Hankel determinant at order " + std::to_string(*k));
      } else if (g.pm.first_zero()) {
        degenerate = true;
      }
    }
  };
  scan(report.grid_a, "m^(a)");
  scan(report.grid_b, "m^(b)");
  for (const auto* pm : {&report.corollary.c_ratio_pm, &report.corollary.c_pm}) {
    if (pm->has_value() && (*pm)->first_negative()) {
      refuted = true;
      report.notes.push_back("coefficient sequence fails a necessary moment-sequence condition");
    }
  }
  report.verdict = refuted ? Verdict::refuted : degenerate ? Verdict::degenerate : Verdict::certified;
  return report;
}

CorollaryChecks corollary_checks(const LancasterProblem& prob, int K) {
  if (K < 0 || K > prob.order()) throw InvalidArgument("corollary index out of range");
  const auto count = static_cast<std::size_t>(K) + 1;
  CorollaryChecks out;

  Rational sum = 0;
  for (std::size_t n = 0; n < count; ++n) {
    sum += prob.coeffs[n] * prob.coeffs[n];
    out.sum_c2_partials.push_back(sum);
  }

  // sum_n c_n a_{n,0} b_{n,0}, a_{n,0} = pi^a_{n,0} / sqrt(|alpha_n|^2)
  if (prob.support.zero_in_supp_mu) {
    OriginSum& origin = out.origin_sum;
    origin.applicable = true;
    Rational exact = 0;
    bool all_exact = true;
    for (std::size_t n = 0; n < count; ++n) {
      const auto row = static_cast<Eigen::Index>(n);
      const Rational core = prob.coeffs[n] * prob.alpha.pi()(row, 0) * prob.beta.pi()(row, 0);
      const Rational norm_product = prob.alpha.norms()[n] * prob.beta.norms()[n];
      if (auto root = exact_sqrt(norm_product)) {
        exact += core / *root;
        origin.value += to_real(core / *root);
      } else {
        all_exact = all_exact && core == 0;
        origin.value += to_real(core) / boost::multiprecision::sqrt(to_real(norm_product));
      }
    }
    if (all_exact) {
      origin.exact = exact;
      origin.sign = exact.sign();
    } else {
      origin.sign = origin.value > 0 ? 1 : origin.value < 0 ? -1 : 0;
    }
  } else {
    out.notes.push_back("(b) skipped: 0 not declared in supp mu");
  }

  const int pm_order = K / 2;
  if (prob.support.mu_unbounded) {
    std::vector<Rational> ratio;
    bool rational = true;
    for (std::size_t n = 0; n < count && rational; ++n) {
      const auto row = static_cast<Eigen::Index>(n);
      // c_n a_{n,n} / b_{n,n} = c_n (pi^a_nn / pi^b_nn) sqrt(|beta_n|^2 / |alpha_n|^2)
      auto root = exact_sqrt(prob.beta.norms()[n] / prob.alpha.norms()[n]);
      if (!root) {
        rational = false;
        break;
      }
      ratio.push_back(prob.coeffs[n] * prob.alpha.pi()(row, row) / prob.beta.pi()(row, row) * *root);
    }
    if (rational) {
      out.c_ratio_pm = is_pm(MomentSequence(std::move(ratio), "c_n a_nn/b_nn"), pm_order);
    } else {
      out.notes.push_back("(c) skipped: leading-coefficient ratios are irrational");
    }
  } else {
    out.notes.push_back("(c) skipped: supp mu not declared unbounded");
  }

  if (prob.support.same_marginals && prob.support.mu_unbounded) {
    out.c_pm = is_pm(MomentSequence({prob.coeffs.begin(), prob.coeffs.begin() + static_cast<std::ptrdiff_t>(count)},
                                    "c_n"),
                     pm_order);
  } else {
    out.notes.push_back("(d) skipped: marginals not declared equal with unbounded support");
  }
  return out;
}

std::vector<PcFlag> pc_full_order_check(const std::vector<Polynomial>& h, const OrthoBasis& beta) {
  std::vector<PcFlag> flags;
  flags.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    PcFlag flag;
    flag.n = static_cast<int>(i);
    if (h[i].degree() > beta.order()) {
      flags.push_back(std::move(flag));
      continue;
    }
    flag.components = expand_in_basis(h[i], beta);
    flag.full_order = h[i].degree() == flag.n && flag.components(flag.n) != 0;
    flag.diagonal = flag.full_order;
    for (int j = 0; j < flag.n && flag.diagonal; ++j) flag.diagonal = flag.components(j) == 0;
    flags.push_back(std::move(flag));
  }
  return flags;
}

std::vector<Rational> lancaster_candidate(std::string_view key, std::size_t length) {
  if (key == "catalan_quarter") {
    return pm_product(builtin("catalan", length), builtin("geometric:1/4", length)).values();
  }
  if (key == "geometric" || key.starts_with("geometric:") || key.starts_with("log_kernel:") || key == "fib_scaled") {
    return builtin(key, length).values();
  }
  throw InvalidArgument("unknown Lancaster candidate '" + std::string(key) + "'");
}

}  // namespace poslab
