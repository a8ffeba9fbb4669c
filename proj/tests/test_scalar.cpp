#include <doctest.h>

#include "oracles.hpp"
#include "poslab/bareiss.hpp"
#include "poslab/error.hpp"
#include "poslab/scalar.hpp"

using namespace poslab;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("+5") == Rational(5));
  CHECK(format_rational(Rational(-6, 8)) == "-3/4");
  CHECK(format_rational(Rational(7)) == "7/1");
  CHECK_THROWS_AS(parse_rational("0.5"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1e3"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidArgument);
}

TEST_CASE("rationals stay reduced and exact") {
  oracle::RandomRationals rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.next(1000, 1000);
    const Rational b = rng.next(1000, 1000);
    CHECK((a + b) - b == a);
    CHECK(gcd(abs(numerator(a)), denominator(a)) == 1);
    CHECK(denominator(a) >= 1);
    CHECK(parse_rational(format_rational(a)) == a);
  }
}

TEST_CASE("combinatorial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(power(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(exact_sqrt(Rational(9, 16)) == Rational(3, 4));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
}

TEST_CASE("real formatting honours the digit count") {
  CHECK(format_real(Real(1) / 3, 5) == "0.33333");
  CHECK(format_real(Real(2), 17) == "2");
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  oracle::RandomRationals rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform(1, 5);
    RationalMatrix a(n, n);
    oracle::Grid g(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        // Sparse entries exercise the pivot search.
        g[i][j] = a(i, j) = rng.uniform(0, 3) == 0 ? Rational(0) : rng.next();
      }
    }
    CHECK(bareiss_determinant(a) == oracle::cofactor_det(g));
  }
  RationalMatrix singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK(bareiss_determinant(singular) == 0);
}
