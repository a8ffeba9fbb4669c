#include <doctest.h>

#include "oracles.hpp"
#include "poslab/error.hpp"
#include "poslab/mehler.hpp"
#include "poslab/positivity.hpp"

#include <cmath>

using namespace poslab;

namespace {

OrthoBasis catalan_basis(int order) { return opoly_from_moments(builtin("catalan", 2 * order + 1), order); }

std::vector<Rational> padded(std::vector<Rational> c, std::size_t length) {
  c.resize(length, Rational(0));
  return c;
}

}  // namespace

TEST_CASE("measure moments from coefficients") {
  const OrthoBasis h = hermite(6);
  SUBCASE("c = e_0 gives the source measure") {
    const auto m = measure_moments_from_coefficients(SeriesSpec(h, {1}));
    CHECK(m.values() == builtin("gaussian", 7).values());
  }
  SUBCASE("c = e_1 gives x dmu") {
    const auto m = measure_moments_from_coefficients(SeriesSpec(h, {0, 1, 0}));
    CHECK(m.values() == std::vector<Rational>{0, 1, 0, 3, 0, 15, 0});
  }
  SUBCASE("mehler coefficients at y = 1") {
    const Rational rho(1, 2);
    const auto m = measure_moments_from_coefficients(SeriesSpec(h, mehler_series_coefficients(rho, 1, 6)));
    CHECK(m[1] == Rational(1, 2));
    CHECK(m[2] == 1);
    CHECK(m.values() == oracle::normal_moments(rho, 1 - rho * rho, 6));
  }
  CHECK_THROWS_AS(SeriesSpec(hermite(2), {1, 0, 0, 0}), InsufficientMoments);
  CHECK_THROWS_AS(SeriesSpec(hermite(2), {}), InvalidArgument);
}

TEST_CASE("coefficients from measure") {
  const OrthoBasis h = hermite(5);
  CHECK(coefficients_from_measure(h, builtin("gaussian", 6)) == padded({1}, 6));
  const Rational rho(1, 2);
  const MomentSequence nu(oracle::normal_moments(rho, 1 - rho * rho, 5));
  const auto c = coefficients_from_measure(h, nu);
  CHECK(c[1] == Rational(1, 2));
  CHECK(c[2] == 0);
  for (int n = 0; n <= 5; ++n) CHECK(c[n] == oracle::pow(rho, n) * eval_poly(h.poly(n), 1) / oracle::fact(n));
  CHECK_THROWS_AS(coefficients_from_measure(h, builtin("gaussian", 5)), InsufficientMoments);
}

TEST_CASE("round trip over Hermite and Catalan bases") {
  oracle::RandomRationals rng(99);
  const OrthoBasis bases[] = {hermite(9), catalan_basis(9)};
  for (const auto& basis : bases) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto c = rng.vector(static_cast<std::size_t>(rng.uniform(1, 10)), 50, 12);
      const auto m = measure_moments_from_coefficients(SeriesSpec(basis, c));
      CHECK(coefficients_from_measure(basis, m) == padded(c, 10));
    }
  }
}

TEST_CASE("certify_positive") {
  const OrthoBasis h = hermite(8);
  SUBCASE("mehler series at y = 1 certifies") {
    const auto cert = certify_positive(SeriesSpec(h, mehler_series_coefficients(Rational(1, 2), 1, 8)), 4);
    CHECK(cert.verdict == Verdict::certified);
    CHECK(cert.verdict_order == 4);
    CHECK(cert.pm_report.strictly_positive);
  }
  SUBCASE("c = e_1 is refuted at order 1") {
    const auto cert = certify_positive(SeriesSpec(h, {0, 1, 0}), 1);
    CHECK(cert.verdict == Verdict::refuted);
    CHECK(cert.verdict_order == 1);
    CHECK(cert.pm_report.hankel_dets.at(1) == -1);
    CHECK(cert.pm_report.first_negative() == 1);
  }
  SUBCASE("c = e_0 certifies with the source moments") {
    const auto cert = certify_positive(SeriesSpec(h, {1}), 4);
    CHECK(cert.verdict == Verdict::certified);
    CHECK(cert.recovered_moments.values() == builtin("gaussian", 9).values());
  }
  SUBCASE("point mass is degenerate, not refuted") {
    const auto c = coefficients_from_measure(h, builtin("geometric:1/2", 9));
    const auto cert = certify_positive(SeriesSpec(h, c), 3);
    CHECK(cert.verdict == Verdict::degenerate);
    CHECK(cert.verdict_order == 1);
  }
  CHECK_THROWS_AS(certify_positive(SeriesSpec(h, {1}), 5), InsufficientMoments);
}

TEST_CASE("refutations are witnessed by a negative partial sum") {
  const OrthoBasis h = hermite(8);
  oracle::RandomRationals rng(3);
  int refuted = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto c = rng.vector(4, 10, 4);
    c[0] = 1;
    const SeriesSpec spec(h, c);
    if (certify_positive(spec, 4).verdict != Verdict::refuted) continue;
    ++refuted;
    bool negative = false;
    for (int i = -40; i <= 40 && !negative; ++i) {
      const Rational x(i, 8);
      Rational f = 0;
      for (std::size_t n = 0; n < c.size(); ++n) f += c[n] * eval_poly(h.poly(static_cast<int>(n)), x);
      negative = f < 0;
    }
    CHECK(negative);
  }
  CHECK(refuted > 0);
  // c = e_1 sums to x, which is negative for x < 0.
  CHECK(eval_poly(h.poly(1), -1) < 0);
}

TEST_CASE("coefficients of a catalog measure always certify") {
  const OrthoBasis bases[] = {hermite(10), catalan_basis(10)};
  for (const auto& basis : bases) {
    for (const char* key : {"gaussian", "catalan", "factorial", "log_kernel:0", "log_kernel:2", "fib_even"}) {
      CAPTURE(key);
      const auto c = coefficients_from_measure(basis, builtin(key, 11));
      const auto cert = certify_positive(SeriesSpec(basis, c), 5);
      CHECK(cert.verdict == Verdict::certified);
      CHECK(cert.recovered_moments.values() == builtin(key, 11).values());
    }
  }
}

TEST_CASE("RM diagnostic") {
  const OrthoBasis h = hermite(6);
  for (const auto& s : rm_diagnostic(SeriesSpec(h, {1}), 6)) CHECK(s == 0);

  // Orthonormal frame, c_n = 2^-n: energies 4^-n.
  std::vector<Real> energies;
  Real bound = 0;
  for (int n = 0; n < 200; ++n) {
    energies.push_back(pow(Real(4), -n));
    const Real lg = log(Real(n + 1));
    bound += energies.back() * lg * lg;
  }
  const auto partials = rm_partials(energies);
  for (std::size_t n = 1; n < partials.size(); ++n) CHECK(partials[n] >= partials[n - 1]);
  CHECK(partials.back() <= bound);
  CHECK(abs(partials.back() - partials[100]) < Real("1e-40"));

  // c_n = (n+1)^-1/2: partial sums grow like log^3 N / 3.
  std::vector<Real> harmonic;
  for (int n = 0; n < 10000; ++n) harmonic.push_back(Real(1) / (n + 1));
  const auto grow = rm_partials(harmonic);
  CHECK(grow[9999] - grow[999] > 100);
  double direct = 0;
  for (int n = 0; n < 10000; ++n) direct += std::pow(std::log(n + 1.0), 2) / (n + 1.0);
  CHECK(static_cast<double>(grow.back()) == doctest::Approx(direct).epsilon(1e-10));

  // Monic Hermite coefficients weigh in the norm n!.
  const auto d = rm_diagnostic(SeriesSpec(h, {0, 0, 1}), 2);
  CHECK(static_cast<double>(d[2]) == doctest::Approx(2 * std::pow(std::log(3.0), 2)).epsilon(1e-14));
}

TEST_CASE("kernel projection") {
  const OrthoBasis h = hermite(6);
  CHECK(kernel_projection_check(h, Polynomial{1}, 0).image == Polynomial{1});
  const Polynomial cube = Polynomial::monomial(3);
  const auto full = kernel_projection_check(h, cube, 3);
  CHECK(full.image == cube);
  CHECK_FALSE(full.lossy);
  const auto cut = kernel_projection_check(h, cube, 2);
  CHECK(cut.image == Polynomial{0, 3});
  CHECK(cut.lossy);
  CHECK(kernel_projection_check(h, cut.image, 2).image == cut.image);
  CHECK_THROWS_AS(kernel_projection_check(h, cube, 7), InvalidArgument);

  oracle::RandomRationals rng(17);
  const OrthoBasis cat = catalan_basis(6);
  for (int trial = 0; trial < 20; ++trial) {
    const int deg = rng.uniform(0, 6);
    const Polynomial f(rng.vector(static_cast<std::size_t>(deg + 1)));
    const int order = rng.uniform(0, 6);
    const auto p = kernel_projection_check(cat, f, order);
    if (f.degree() <= order) CHECK(p.image == f);
    CHECK(kernel_projection_check(cat, p.image, order).image == p.image);
  }
}
