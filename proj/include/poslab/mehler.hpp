#ifndef POSLAB_MEHLER_HPP
#define POSLAB_MEHLER_HPP

// The bivariate Gaussian as a Lancaster expansion: Hermite families on both
// sides and c_n = rho^n. Everything about it is known in closed form, which
// makes it the reference instance for the rest of the library.

#include "poslab/lancaster.hpp"

#include <string>
#include <vector>

namespace poslab {

/// Moments of N(rho y, 1 - rho^2) as polynomials in y:
/// m_n(y) = sum_j C(n,2j) (1-rho^2)^j (2j-1)!! rho^{n-2j} y^{n-2j}
std::vector<Polynomial> mehler_moments(const Rational& rho, int order);

/// Conditional density of x given y, (2 pi (1-rho^2))^{-1/2} exp(-(x-rho y)^2 / (2(1-rho^2))).
Real mehler_density(const Real& x, const Real& y, const Rational& rho);

/// sum_{n<=N} rho^n H_n(x) H_n(y) / n!
Real mehler_kernel_truncated(const Real& x, const Real& y, const Rational& rho, int order);

/// Hermite/Hermite problem with c_n = rho^n, n = 0..order, and the support
/// flags of the standard normal.
LancasterProblem hermite_mehler_problem(const Rational& rho, int order);

/// Coefficients c_n of sum c_n H_n(x) whose recovered measure is
/// N(rho y, 1 - rho^2): c_n n! = rho^n H_n(y).
std::vector<Rational> mehler_series_coefficients(const Rational& rho, const Rational& y, int order);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Closed-form identities and positivity checks of the Hermite/Mehler
/// instance, each evaluated independently.
std::vector<CheckResult> run_mehler_battery(const Rational& rho, int order);

}  // namespace poslab

#endif  // POSLAB_MEHLER_HPP
