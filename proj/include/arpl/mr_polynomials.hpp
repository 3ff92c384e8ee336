#pragma once
/**
 * @file mr_polynomials.hpp
 * @brief Mallows-Riordan polynomials J_n and the derived families J~_n, J^_n,
 *        C_n, plus zigzag numbers, complete-graph Tutte polynomials, the
 *        nested-integral volume polynomial and the one-sided derivatives of
 *        p_n at theta = -1.
 *
 * Conventions:
 *   log sum theta^{n(n-1)/2} z^n/n! = sum (theta-1)^{n-1} J_n(theta) z^n/n!
 *   sum J~_{n+1} z^n/n! = (sum (-1)^n J_{n+1} z^n/n!)^{-1}
 *   sum J^_{n+1} z^n/n! = (1-2z)^{-1} (sum J_{n+1} z^n/n!)^{-1}
 */

#include <deque>
#include <mutex>
#include <vector>

#include "arpl/polynomial.hpp"
#include "arpl/rational.hpp"

namespace arpl {

enum class Verify { Off, On };
enum class Family { J, JTilde, JHat };

// Memo table for one family, extended on demand. References stay valid.
class PolyFamilyCache {
 public:
  explicit PolyFamilyCache(Family f) : family_(f) {}
  const Polynomial& get(int n);
  int max_computed() const;

 private:
  Family family_;
  mutable std::mutex mu_;
  std::deque<Polynomial> table_;  // table_[n-1] holds member n
};

// Fast single-route constructors backed by process-wide caches. With
// Verify::On every other route is recomputed up to n and compared exactly;
// a mismatch throws std::logic_error.
const Polynomial& mallows_riordan(int n, Verify v = Verify::Off);
const Polynomial& j_tilde(int n, Verify v = Verify::Off);
const Polynomial& j_hat(int n, Verify v = Verify::Off);
// C_n = (-theta)^{-(n-1)} J~_{n+1}
Polynomial c_poly(int n);

// Euler zigzag number from the series of (1 + sin z)/cos z.
Integer zigzag(int n);

// Independent constructions. Each returns t with t[n] the n-th member for
// 1 <= n <= nmax (t[0] is the zero polynomial).
namespace routes {
// J_{n+2} = sum_i C(n,i)(1+..+theta^i) J_{i+1} J_{n+1-i}
std::vector<Polynomial> j_recurrence(int nmax);
// coefficients of log E(theta, z)
std::vector<Polynomial> j_log_e(int nmax);
// ratio of two series with Laurent coefficients, no J involved
std::vector<Polynomial> j_ratio(int nmax);
// linear recurrence in which J_{n-1} does not appear
std::vector<Polynomial> j_linear(int nmax);
// ratio of the two (1+..+theta^k)^n / theta^{n(n+1)/2} series
std::vector<Polynomial> j_gessel(int nmax);

std::vector<Polynomial> jt_inverse(int nmax);
// J~_{n+1} = sum_{k=1}^n (-1)^{k-1} C(n,k) J_{k+1} J~_{n+1-k}
std::vector<Polynomial> jt_recurrence(int nmax);
// J~_{n+2} = sum_k C(n,k) (-1)^k (1+..+theta^k) J_{k+1} J~_{n+1-k}
std::vector<Polynomial> jt_alternate(int nmax);
// exp of sum (-1)^{n-1} (1+..+theta^{n-1}) J_n z^n/n!
std::vector<Polynomial> jt_exp(int nmax);

// J^_{n+1} = 2^n n! sum_{k<=n} (-1)^k J~_{k+1} / (2^k k!)
std::vector<Polynomial> jh_sum(int nmax);
// J^_{n+1} = 2n J^_n + (-1)^n J~_{n+1}
std::vector<Polynomial> jh_recurrence(int nmax);
std::vector<Polynomial> jh_series(int nmax);
}  // namespace routes

// Exact values at a fixed rational point, cheap for large n.
//   j_scaled_values:       c_n = J_{n+1}(t) / n!
//   j_tilde_scaled_values: d_n = J~_{n+1}(t) / n!
//   j_hat_scaled_values:   e_n = J^_{n+1}(t) / (2^n n!)
// Each returns entries n = 0..nmax.
std::vector<Rational> j_scaled_values(const Rational& t, int nmax);
std::vector<Rational> j_tilde_scaled_values(const Rational& t, int nmax);
std::vector<Rational> j_hat_scaled_values(const Rational& t, int nmax);
// Double version of j_scaled_values; all terms are positive for t >= -1.
std::vector<double> j_scaled_values_fp(double t, int nmax);

// Polynomial in two variables, stored by powers of the first one.
struct Bivariate {
  std::vector<Polynomial> by_x;  // by_x[k] is the coefficient of x^k
  Rational operator()(const Rational& x, const Rational& y) const;
  bool is_integral() const;
  friend bool operator==(const Bivariate&, const Bivariate&) = default;
};

// T_n(x, theta) with sum T_n z^n/n! = exp(x sum_{n>=1} J_n(theta+1) z^n/n!).
Bivariate tutte_complete(int n);
// Tutte polynomial of K_n: T_{K_n}(x, y) = T_n(x-1, y-1)/(x-1), n >= 1.
Bivariate tutte_kn(int n);

// int_1^theta int_1^{theta x_1} ... int_1^{theta x_{n-1}} dx_n ... dx_1
Polynomial nested_volume(int n);

struct BoundaryDerivatives {
  Rational left_p1, right_p1, left_p2, right_p2;
};
// One-sided first and second derivatives of theta -> p_n(theta) (uniform on
// [-1,1]) at theta = -1. n >= 2.
BoundaryDerivatives boundary_derivatives(int n);

// Exploratory: smallest (n, theta) on the grid with J_n(theta) < 0, theta < -1.
struct NegativeWitness {
  int n;
  Rational theta;
  Rational value;
};
std::vector<NegativeWitness> scan_negative_j(int nmax, const std::vector<Rational>& grid);

}  // namespace arpl
