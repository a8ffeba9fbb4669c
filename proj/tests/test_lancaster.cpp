#include <doctest.h>

#include "oracles.hpp"
#include "poslab/error.hpp"
#include "poslab/lancaster.hpp"
#include "poslab/mehler.hpp"

#include <cmath>

using namespace poslab;

namespace {

std::vector<Rational> geometric(const Rational& rho, int order) {
  std::vector<Rational> c;
  for (int n = 0; n <= order; ++n) c.push_back(oracle::pow(rho, n));
  return c;
}

std::vector<Rational> small_grid() { return {-2, -1, 0, 1, 2}; }

}  // namespace

TEST_CASE("moment polynomials of the Mehler instance") {
  const auto mp = lancaster_moment_polys(hermite_mehler_problem(Rational(1, 2), 6));
  REQUIRE(mp.exact());
  CHECK(mp.ma[0].rational() == Polynomial{1});
  CHECK(mp.mb[0].rational() == Polynomial{1});
  CHECK(mp.ma[1].rational() == Polynomial{0, Rational(1, 2)});
  CHECK(mp.ma[2].rational() == Polynomial{Rational(3, 4), 0, Rational(1, 4)});
}

TEST_CASE("recursion equals the closed form for n <= 10") {
  for (const Rational& rho : {Rational(1, 2), Rational(-1, 3), Rational(3, 4)}) {
    const auto mp = lancaster_moment_polys(hermite_mehler_problem(rho, 10));
    const auto closed = mehler_moments(rho, 10);
    const auto ref = oracle::conditional_moment_polys(rho, 10);
    for (int n = 0; n <= 10; ++n) {
      CHECK(mp.ma[n].rational() == closed[n]);
      CHECK(mp.mb[n].rational() == closed[n]);
      CHECK(closed[n] == Polynomial(ref[n]));
    }
  }
}

TEST_CASE("product measure gives the marginal moments") {
  const OrthoBasis h = hermite(6);
  const OrthoBasis cat = opoly_from_moments(builtin("catalan", 13), 6);
  const LancasterProblem prob(cat, h, {1, 0, 0, 0, 0, 0, 0});
  const auto mp = lancaster_moment_polys(prob);
  for (int n = 0; n <= 6; ++n) {
    CHECK(mp.ma[n].rational() == Polynomial::constant(builtin("catalan", 7)[n]));
    CHECK(mp.mb[n].rational() == Polynomial::constant(builtin("gaussian", 7)[n]));
  }
  const auto report = lancaster_check(prob, small_grid(), {0, 1, 2, 3}, 3);
  CHECK(report.verdict == Verdict::certified);
}

TEST_CASE("leading coefficient law") {
  // beta = monic family of N(0, 4): orthonormal leading ratio b_nn / a_nn = 2^-n.
  const OrthoBasis h = hermite(8);
  const OrthoBasis wide = opoly_from_moments(pm_product(builtin("gaussian", 17), builtin("geometric:2", 17)), 8);
  oracle::RandomRationals rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    auto c = rng.vector(9, 5, 7);
    c[0] = 1;
    const auto mp = lancaster_moment_polys(LancasterProblem(h, wide, c));
    REQUIRE(mp.exact());
    for (int n = 1; n <= 8; ++n) {
      const Polynomial ma = mp.ma[n].rational();
      const Polynomial mb = mp.mb[n].rational();
      CHECK(ma.degree() <= n);
      CHECK(mb.degree() <= n);
      if (c[n] != 0) {
        CHECK(ma.coeff(n) == c[n] * oracle::pow(Rational(1, 2), n));
        CHECK(mb.coeff(n) == c[n] * oracle::pow(Rational(2), n));
      }
    }
  }
}

TEST_CASE("irrational norm ratios use the split representation") {
  const OrthoBasis h = hermite(4);
  const OrthoBasis cat = opoly_from_moments(builtin("catalan", 9), 4);
  const LancasterProblem prob(h, cat, geometric(Rational(1, 3), 4));
  const auto mp = lancaster_moment_polys(prob);
  CHECK_FALSE(mp.exact());
  CHECK(mp.ma[1].is_rational());
  CHECK_FALSE(mp.ma[2].is_rational());
  CHECK(mp.ma[2].degree() == 2);
  // ma[2] leading coefficient: c_2 * sqrt(2!/1) = sqrt(2)/9.
  Rational lead_sqrt2 = 0;
  for (const auto& [radicand, part] : mp.ma[2].terms()) {
    if (radicand == 2) lead_sqrt2 = part.coeff(2);
    else CHECK(part.coeff(2) == 0);
  }
  CHECK(lead_sqrt2 == Rational(1, 9));
  CHECK_THROWS_AS(lancaster_check(prob, small_grid(), small_grid(), 2), InvalidArgument);
}

TEST_CASE("surd polynomial arithmetic") {
  SurdPolynomial s(Polynomial{1, 1});
  s.add(8, Polynomial{0, 1});
  s.add(Rational(1, 2), Polynomial{1});
  CHECK_FALSE(s.is_rational());
  CHECK(s.terms().size() == 2);  // sqrt(8) = 2 sqrt(2), sqrt(1/2) = sqrt(2)/2
  s.add(2, Polynomial{Rational(-1, 2), -2});
  CHECK(s.is_rational());
  CHECK(s.rational() == Polynomial{1, 1});
  CHECK_THROWS_AS(s.add(-1, Polynomial{1}), InvalidArgument);
}

TEST_CASE("lancaster_check on the Mehler instance") {
  const auto prob = hermite_mehler_problem(Rational(1, 2), 6);
  const auto report = lancaster_check(prob, small_grid(), small_grid(), 3);
  CHECK(report.verdict == Verdict::certified);
  CHECK(report.tested_order == 3);
  REQUIRE(report.grid_a.size() == 5);
  for (const auto& g : report.grid_a) {
    CHECK(g.pm.strictly_positive);
    const auto ref = oracle::normal_moments(g.point / 2, Rational(3, 4), 6);
    CHECK(g.moments.values() == ref);
    Rational expected = 1;
    for (int k = 0; k <= 3; ++k) {
      expected *= oracle::pow(Rational(3, 4), k) * oracle::fact(k);
      CHECK(g.pm.hankel_dets[k] == expected);
    }
  }
  CHECK_THROWS_AS(lancaster_check(prob, small_grid(), small_grid(), 4), InsufficientMoments);
}

TEST_CASE("c_1 = 2 is refuted") {
  auto c = geometric(Rational(1, 2), 4);
  c[1] = 2;
  const LancasterProblem prob(hermite(4), hermite(4), c);
  const auto mp = lancaster_moment_polys(prob);
  const Rational m1 = eval_poly(mp.ma[1].rational(), 1);
  const Rational m2 = eval_poly(mp.ma[2].rational(), 1);
  CHECK(m2 - m1 * m1 == -3);
  const auto report = lancaster_check(prob, small_grid(), small_grid(), 1);
  CHECK(report.verdict == Verdict::refuted);
}

TEST_CASE("report is symmetric under swapping the marginals") {
  const OrthoBasis h = hermite(6);
  const OrthoBasis wide = opoly_from_moments(pm_product(builtin("gaussian", 13), builtin("geometric:2", 13)), 6);
  const LancasterProblem prob(h, wide, geometric(Rational(1, 3), 6));
  const std::vector<Rational> ga{-1, 0, Rational(1, 2)};
  const std::vector<Rational> gb{-3, 2};
  const auto r = lancaster_check(prob, ga, gb, 3);
  const auto s = lancaster_check(prob.swapped(), gb, ga, 3);
  REQUIRE(r.grid_a.size() == s.grid_b.size());
  REQUIRE(r.grid_b.size() == s.grid_a.size());
  for (std::size_t i = 0; i < r.grid_a.size(); ++i) {
    CHECK(r.grid_a[i].moments == s.grid_b[i].moments);
    CHECK(r.grid_a[i].pm.hankel_dets == s.grid_b[i].pm.hankel_dets);
  }
  for (std::size_t i = 0; i < r.grid_b.size(); ++i) CHECK(r.grid_b[i].moments == s.grid_a[i].moments);
  CHECK(r.verdict == s.verdict);
}

TEST_CASE("grid evaluation is deterministic") {
  const auto prob = hermite_mehler_problem(Rational(3, 4), 10);
  const auto grid = default_grid();
  CHECK(grid.size() == 9);
  const auto a = lancaster_check(prob, grid, grid, 5);
  for (int run = 0; run < 3; ++run) {
    const auto b = lancaster_check(prob, grid, grid, 5);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(a.grid_a[i].point == b.grid_a[i].point);
      CHECK(a.grid_a[i].pm.hankel_dets == b.grid_a[i].pm.hankel_dets);
    }
  }
}

TEST_CASE("corollary checks") {
  SUBCASE("Mehler instance") {
    const Rational rho(1, 2);
    const auto prob = hermite_mehler_problem(rho, 20);
    const auto cc = corollary_checks(prob, 20);
    for (const auto& s : cc.sum_c2_partials) CHECK(s <= 1 / (1 - rho * rho));
    REQUIRE(cc.origin_sum.applicable);
    REQUIRE(cc.origin_sum.exact.has_value());
    CHECK(cc.origin_sum.sign == 1);
    CHECK(static_cast<double>(cc.origin_sum.value) == doctest::Approx(oracle::origin_sum(0.5, 10)).epsilon(1e-15));
    CHECK(std::abs(static_cast<double>(cc.origin_sum.value) - 2 / std::sqrt(3.0)) < 1e-6);
    REQUIRE(cc.c_ratio_pm.has_value());
    REQUIRE(cc.c_pm.has_value());
    CHECK(cc.c_pm->is_pm());
    CHECK(cc.c_ratio_pm->is_pm());
    for (std::size_t n = 1; n < cc.c_pm->hankel_dets.size(); ++n) CHECK(cc.c_pm->hankel_dets[n] == 0);
  }
  SUBCASE("independence") {
    SupportFlags flags{true, true, true, true};
    const LancasterProblem prob(hermite(4), hermite(4), {1, 0, 0, 0, 0}, flags);
    const auto cc = corollary_checks(prob, 4);
    for (const auto& s : cc.sum_c2_partials) CHECK(s == 1);
    CHECK(cc.origin_sum.exact == Rational(1));
  }
  SUBCASE("gates follow the support flags") {
    const LancasterProblem prob(hermite(4), hermite(4), geometric(Rational(1, 2), 4));
    const auto cc = corollary_checks(prob, 4);
    CHECK_FALSE(cc.origin_sum.applicable);
    CHECK_FALSE(cc.c_ratio_pm.has_value());
    CHECK_FALSE(cc.c_pm.has_value());
  }
  SUBCASE("non-pm coefficients refute through (d)") {
    SupportFlags flags{true, true, true, true};
    const LancasterProblem prob(hermite(6), hermite(6), {1, 0, Rational(1, 2), 0, 0, 0, 0}, flags);
    const auto cc = corollary_checks(prob, 6);
    REQUIRE(cc.c_pm.has_value());
    CHECK_FALSE(cc.c_pm->is_pm());
    CHECK(lancaster_check(prob, {0}, {0}, 3).verdict == Verdict::refuted);
  }
}

TEST_CASE("full-order check") {
  const OrthoBasis h = hermite(6);
  std::vector<Polynomial> hn;
  for (int n = 0; n <= 6; ++n) hn.push_back(oracle::pow(Rational(1, 2), n) * h.poly(n));
  for (const auto& f : pc_full_order_check(hn, h)) {
    CHECK(f.full_order);
    CHECK(f.diagonal);
  }
  hn[2] = Polynomial{0, 1};
  const auto flags = pc_full_order_check(hn, h);
  CHECK(flags[0].full_order);
  CHECK_FALSE(flags[2].full_order);
  CHECK(flags[3].full_order);
  // Full order but not diagonal.
  hn[2] = h.poly(2) + h.poly(0);
  const auto mixed = pc_full_order_check(hn, h);
  CHECK(mixed[2].full_order);
  CHECK_FALSE(mixed[2].diagonal);
}

TEST_CASE("lancaster candidates") {
  CHECK(lancaster_candidate("geometric:1/2", 4) == geometric(Rational(1, 2), 3));
  CHECK(lancaster_candidate("catalan_quarter", 3) == std::vector<Rational>{1, Rational(1, 4), Rational(1, 8)});
  CHECK(lancaster_candidate("log_kernel:1", 3) == std::vector<Rational>{1, Rational(1, 4), Rational(1, 9)});
  CHECK(lancaster_candidate("fib_scaled", 4) ==
        std::vector<Rational>{1, Rational(1, 3), Rational(2, 9), Rational(3, 27)});
  CHECK_THROWS_AS(lancaster_candidate("bogus", 3), InvalidArgument);
  for (const char* key : {"geometric:1/2", "catalan_quarter", "log_kernel:1", "fib_scaled"}) {
    CAPTURE(key);
    const auto c = lancaster_candidate(key, 11);
    CHECK(is_pm(MomentSequence(c), 5).is_pm());
    Rational sum = 0;
    for (const auto& v : c) sum += v * v;
    CHECK(sum < 2);
  }
}

TEST_CASE("mehler closed forms") {
  CHECK(mehler_moments(Rational(1, 3), 0).at(0) == Polynomial{1});
  const Rational rho(2, 5);
  CHECK(mehler_moments(rho, 2).at(2) == Polynomial{1 - rho * rho, 0, rho * rho});
  const auto indep = mehler_moments(0, 8);
  for (int n = 0; n <= 8; ++n) CHECK(indep[n] == Polynomial::constant(builtin("gaussian", 9)[n]));
  CHECK_THROWS_AS(mehler_moments(1, 3), InvalidArgument);
  CHECK_THROWS_AS(mehler_density(0, 0, Rational(-1)), InvalidArgument);
}

TEST_CASE("conditional expectation of H_n") {
  const OrthoBasis h = hermite(10);
  for (const Rational& rho : {Rational(1, 2), Rational(-2, 3)}) {
    const auto m = mehler_moments(rho, 10);
    for (int n = 0; n <= 10; ++n) {
      Polynomial lhs;
      for (int j = 0; j <= n; ++j) lhs += h.pi()(n, j) * m[j];
      CHECK(lhs == oracle::pow(rho, n) * h.poly(n));
    }
  }
}

TEST_CASE("generating function coefficients") {
  const Rational rho(1, 2);
  const Rational s = 1 - rho * rho;
  const auto m = mehler_moments(rho, 10);
  for (int n = 0; n <= 10; ++n) {
    Polynomial coeff;
    for (int j = 0; 2 * j <= n; ++j) {
      const int k = n - 2 * j;
      coeff += Polynomial::monomial(k, oracle::pow(rho, k) * oracle::pow(s / 2, j) / (oracle::fact(k) * oracle::fact(j)));
    }
    CHECK(m[n] * (1 / oracle::fact(n)) == coeff);
  }
}

TEST_CASE("density and truncated kernel") {
  const double two_pi = 2 * std::acos(-1.0);
  CHECK(static_cast<double>(mehler_density(0, 0, 0)) == doctest::Approx(1 / std::sqrt(two_pi)).epsilon(1e-15));
  const Rational rho(3, 10);
  CHECK(static_cast<double>(mehler_density(0, 0, rho)) ==
        doctest::Approx(1 / std::sqrt(two_pi * 0.91)).epsilon(1e-15));
  CHECK(static_cast<double>(mehler_density(1, 1, rho)) ==
        doctest::Approx(std::exp(-0.49 / 1.82) / std::sqrt(two_pi * 0.91)).epsilon(1e-15));
  CHECK(mehler_kernel_truncated(Real("0.7"), Real("-1.3"), 0, 30) == 1);
  CHECK(static_cast<double>(mehler_kernel_truncated(0, 0, rho, 30)) ==
        doctest::Approx(1 / std::sqrt(0.91)).epsilon(1e-12));
  for (int x = -2; x <= 2; ++x) {
    for (int y = -2; y <= 2; ++y) {
      double direct = 0;
      for (int n = 0; n <= 30; ++n) {
        direct += std::pow(0.3, n) * oracle::hermite_value(n, x) * oracle::hermite_value(n, y) / std::tgamma(n + 1.0);
      }
      const double k = static_cast<double>(mehler_kernel_truncated(x, y, rho, 30));
      CHECK(k == doctest::Approx(direct).epsilon(1e-12));
      CHECK(std::abs(k - oracle::mehler_ratio(x, y, 0.3)) <= 1e-8);
    }
  }
}

TEST_CASE("series coefficients and battery") {
  const auto c = mehler_series_coefficients(Rational(1, 2), 1, 3);
  CHECK(c == std::vector<Rational>{1, Rational(1, 2), 0, Rational(-2, 48)});
  for (const Rational& rho : {Rational(1, 2), Rational(-1, 3)}) {
    for (const auto& r : run_mehler_battery(rho, 10)) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.passed);
    }
  }
  CHECK_THROWS_AS(run_mehler_battery(Rational(1, 2), 1), InvalidArgument);
}
