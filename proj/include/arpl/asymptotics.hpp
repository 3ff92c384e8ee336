#pragma once
/**
 * @file asymptotics.hpp
 * @brief Deformed exponential E(theta, z) = sum theta^{n(n-1)/2} z^n/n!, its
 *        roots, decay rates of p_n(theta), the limit ell(theta) for theta > 1,
 *        biexponential q-series, the compound-Poisson Tutte law and
 *        log-convexity diagnostics.
 *
 * Error bounds are analytic estimates, not validated enclosures.
 */

#include <optional>
#include <vector>

#include "arpl/rational.hpp"

namespace arpl {

// |theta| <= 1. Sum truncated once the geometric tail bound drops below
// tol/10; terms are accumulated in GMP floats sized to the largest term, so
// cancellation for large |z| does not eat the digits.
double deformed_exp(double theta, double z, double tol = 1e-15);
// Number of terms the evaluator used for (theta, z, tol).
int deformed_exp_order(double theta, double z, double tol = 1e-15);

struct RootResult {
  double value = 0;
  double residual = 0;  // |E(theta, -value)|
  double lo = 0, hi = 0;  // bracket straddling the sign change
  int truncation_order = 0;
};

// z_theta = first positive zero of z -> E(theta, -z), theta in [-1, 1).
RootResult first_negative_root(double theta, double tol = 1e-10);
// a_1 < ... < a_K, the first K positive zeros of z -> E(theta, -z).
std::vector<RootResult> positive_roots(double theta, int K, double tol = 1e-10);

struct RateBundle {
  double theta = 0;
  double z_root = 0;  // z_theta, or z_{1/theta} when theta < -1 or theta > 1
  double lambda = 0;  // decay rate of p_n; equals mu for theta < -1, lambda_1(theta) for theta > 1
  std::optional<double> mu;              // 2(1-theta) z_{1/theta}, theta < -1
  std::optional<double> c_estimate;      // stabilized 1/(p_n mu^n), theta < -1
  std::optional<double> c_drift;         // max relative change of that fit over n in [25, 30]
  std::optional<double> ell;             // theta > 1
  std::optional<double> nu;              // theta >= 2
  std::optional<double> kappa_estimate;  // empirical log rate of p_n - ell, theta >= 2
  bool inequalities_hold = true;
};

// theta in [-1, 1/2], theta < -1, or theta > 1. (1/2, 1] has no formula.
RateBundle decay_rate(double theta);

struct EllResult {
  double value = 0;
  double error_bound = 0;  // estimated |value - ell|
  Rational partial_sum;    // sum_{n<=N} p_n(1/theta), exact
  double tail_estimate = 0;
  int terms = 0;  // N + 1
};

// ell(theta) = 1 / sum_n p_n(1/theta), theta > 1.
// For 1 < theta < 2 the terms come from the exact oracle and stop at n = 18;
// error_bound may then exceed tol.
EllResult limit_ell(double theta, double tol = 1e-12);
// a_0..a_K of ell(theta) = sum_k a_k theta^{-k}, exact.
std::vector<Rational> ell_expansion_coefficients(int K);

// nu_theta: the zero of
//   L(z) = 1/a_1 + sum_{k>=2} (1 - z/lambda_1) / (a_k (1 - z/lambda_k))
// in (lambda_1, lambda_2), a_k = a_k(1/theta), lambda_k = 2(1-1/theta) a_k.
// Terms beyond K are folded in through sum_k 1/a_k = 1.
RootResult nu_root(double theta, int K = 12, double tol = 1e-10);
double nu_function(double theta, double z, const std::vector<RootResult>& roots);

// Biexponential (density e^{-|x|}/2) persistence generating function
// sum p_n(theta) z^n via q-Pochhammer products, theta > 0, theta != 1, |z| < 1.
double qseries_biexp(double theta, double z, double tol = 1e-14);
// Its Taylor coefficients p_0..p_order from truncated series arithmetic on
// the same products.
std::vector<double> qseries_biexp_coefficients(double theta, int order, double tol = 1e-15);
// theta <= 0: p_n = 2^{-n} (1-theta)^{-(n-1)}, n >= 1.
double biexp_persistence_nonpositive(double theta, int n);
// (z; q)_infinity
double qpochhammer(double z, double q, double tol = 1e-16);

// P[X_theta(t) = n] = exp(-t mbar) T_n(t, theta)/n!, theta in [-2, -1),
// with mbar = theta log E(theta+1, 1/theta).
double tutte_poisson_pmf(double t, double theta, int n, double tol = 1e-12);
double tutte_poisson_mass(double theta, double tol = 1e-14);

struct LogConvexity {
  bool holds = true;
  std::optional<std::size_t> first_violation;  // interior index n with x_{n+1} x_{n-1} < x_n^2
};
LogConvexity log_convexity_check(const std::vector<Rational>& seq);
LogConvexity log_convexity_check(const std::vector<double>& seq);

}  // namespace arpl
