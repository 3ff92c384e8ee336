#include <cmath>
#include <stdexcept>
#include <vector>

#include "arpl/asymptotics.hpp"

namespace arpl {

namespace {

void check_theta(double theta) {
  if (!(theta > 0)) throw std::domain_error("qseries_biexp: theta must be positive (theta <= 0 has a closed form)");
  if (theta == 1)
    throw std::domain_error("qseries_biexp: theta = 1 is the random walk case; use sum p_n z^n = (1-z)^{-1/2}");
}

// Power series of (c z; q)_infinity up to z^order.
std::vector<double> qpoch_series(double c, double q, int order, double tol) {
  std::vector<double> s(static_cast<std::size_t>(order + 1), 0.0);
  s[0] = 1.0;
  double alpha = c;
  for (int k = 0; std::fabs(alpha) >= tol || k == 0; ++k) {
    for (int n = order; n >= 1; --n) s[n] -= alpha * s[n - 1];
    alpha *= q;
    if (k > 100000) throw std::runtime_error("qpoch_series: product did not converge");
  }
  return s;
}

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::vector<double> divide(const std::vector<double>& num, const std::vector<double>& den) {
  std::vector<double> out(num.size());
  for (std::size_t n = 0; n < num.size(); ++n) {
    double acc = num[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= den[k] * out[n - k];
    out[n] = acc / den[0];
  }
  return out;
}

}  // namespace

double qpochhammer(double z, double q, double tol) {
  if (!(q >= 0 && q < 1)) throw std::domain_error("qpochhammer: q must lie in [0, 1)");
  double prod = 1.0, f = z;
  for (int k = 1;; ++k) {
    prod *= 1.0 - f;
    f *= q;
    if (std::fabs(f) < tol / k) break;
    if (k > 100000) throw std::runtime_error("qpochhammer: product did not converge");
  }
  return prod;
}

double qseries_biexp(double theta, double z, double tol) {
  check_theta(theta);
  if (!(std::fabs(z) < 1)) throw std::domain_error("qseries_biexp: need |z| < 1");
  const double t = tol / 8;
  if (theta < 1) {
    const double q = theta * theta;
    return (qpochhammer(theta * z, q, t) + qpochhammer(q * z, q, t)) /
           (qpochhammer(z, q, t) + qpochhammer(theta * z, q, t));
  }
  const double s = 1.0 / theta, q = s * s;
  return (qpochhammer(z, q, t) + qpochhammer(s * z, q, t)) /
         ((1.0 - z) * (qpochhammer(s * z, q, t) + qpochhammer(q * z, q, t)));
}

std::vector<double> qseries_biexp_coefficients(double theta, int order, double tol) {
  check_theta(theta);
  if (order < 0) throw std::invalid_argument("qseries_biexp_coefficients: order must be >= 0");
  if (theta < 1) {
    const double q = theta * theta;
    auto num = add(qpoch_series(theta, q, order, tol), qpoch_series(q, q, order, tol));
    auto den = add(qpoch_series(1.0, q, order, tol), qpoch_series(theta, q, order, tol));
    return divide(num, den);
  }
  const double s = 1.0 / theta, q = s * s;
  auto num = add(qpoch_series(1.0, q, order, tol), qpoch_series(s, q, order, tol));
  auto den = add(qpoch_series(s, q, order, tol), qpoch_series(q, q, order, tol));
  for (int n = order; n >= 1; --n) den[n] -= den[n - 1];  // times (1 - z)
  return divide(num, den);
}

double biexp_persistence_nonpositive(double theta, int n) {
  if (theta > 0) throw std::domain_error("biexp_persistence_nonpositive: theta must be <= 0");
  if (n < 0) throw std::out_of_range("biexp_persistence_nonpositive: n must be >= 0");
  if (n == 0) return 1.0;
  return std::pow(0.5, n) / std::pow(1.0 - theta, n - 1);
}

}  // namespace arpl
