#pragma once
/**
 * @file persistence.hpp
 * @brief Exact persistence probabilities p_n(theta) = P[Y_1 >= 0, ..., Y_n >= 0]
 *        for Y_k = theta Y_{k-1} + X_k, Y_0 = 0, X_k uniform on [-a, b].
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "arpl/piecewise.hpp"
#include "arpl/rational.hpp"

namespace arpl {

struct PersistenceQuery {
  int n = 0;
  Rational theta{0};
  Rational a{1};
  Rational b{1};
};

enum class RegionTag { ThmMain1, Cor2, Cor3, FibonacciWindow };

const char* region_name(RegionTag r);

// Exact dispatch:
//   ThmMain1        theta >= -1 and theta + ... + theta^{n-1} <= a/b
//   Cor2            theta <= -1
//   Cor3            theta > 0, a == b and 1/theta + ... + theta^{-(n-1)} <= 1
//   FibonacciWindow otherwise
RegionTag region_of(const PersistenceQuery& q);

// Raised by persistence_closed_form inside the window. lo and hi are the
// window boundaries in theta (floating approximations for reporting).
class NoClosedForm : public std::domain_error {
 public:
  NoClosedForm(double lo, double hi);
  double lo, hi;
};

Rational persistence_closed_form(const PersistenceQuery& q);

// Density propagation; exact for every rational theta.
Rational persistence_oracle(const PersistenceQuery& q);
// p_0 .. p_nmax in one pass.
std::vector<Rational> oracle_sequence(const Rational& theta, const Rational& a, const Rational& b, int nmax);
// Sub-density of Y_n on the survival event.
PiecewisePoly survival_density(const PersistenceQuery& q);

// Closed form when one exists, oracle otherwise.
Rational persistence(const PersistenceQuery& q);

// P[T = n] = p_{n-1} - p_n. For theta >= 2 and a == b the first-hitting
// formula (-1)^{n-1} J~_{n+1}(1/theta) / (2^n n!) is checked as well and a
// mismatch throws std::logic_error.
Rational hitting_pmf(const PersistenceQuery& q);
Rational hitting_pmf_formula(int n, const Rational& theta);

enum class DualitySign { Alternating, Plain };
// Alternating (theta < 0): sum_k (-1)^k p_k(theta) p_{n-k}(1/theta).
// Plain       (theta > 0): sum_k p_k(theta) p_{n-k}(1/theta) - 1.
// Uses oracle values with a = b = 1.
Rational duality_residual(int n, const Rational& theta, DualitySign sign);

// Positive root of theta + ... + theta^{n-1} = ratio (bisection, double).
double fibonacci_boundary(int n, double ratio = 1.0);

}  // namespace arpl
