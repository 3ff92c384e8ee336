#include "arpl/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "arpl/mr_polynomials.hpp"
#include "arpl/persistence.hpp"
#include "arpl/polynomial.hpp"

namespace arpl {

namespace {

struct MpValue {
  mpf_class value;
  int order;
};

// E(theta, z) with absolute error about abs_tol.
MpValue eval_e(double theta, double z, double abs_tol) {
  if (!(std::fabs(theta) <= 1.0)) throw std::domain_error("deformed_exp: |theta| > 1, the series diverges");
  if (!(abs_tol > 0)) throw std::domain_error("deformed_exp: tol must be positive");
  if (theta == 0) {
    mpf_class v(z, 128);
    v += 1;
    return {v, 1};
  }
  const double lt = theta == 0 ? -std::numeric_limits<double>::infinity() : std::log(std::fabs(theta));
  const double lz = z == 0 ? -std::numeric_limits<double>::infinity() : std::log(std::fabs(z));
  const double ltol = std::log(abs_tol);

  // Pick N: the ratio |t_{m+1}/t_m| = |theta|^m |z|/(m+1) never increases, so
  // once r < 1 the tail after N is at most |t_{N+1}| / (1 - r).
  int N = 0;
  double log_max = 0.0;  // log |t_0|
  for (int n = 0;; ++n) {
    const double next = 0.5 * n * (n + 1) * lt + (n + 1) * lz - std::lgamma(n + 2.0);  // log |t_{n+1}|
    const double r = std::exp(std::min(0.0, (n + 1) * lt + lz - std::log(n + 2.0)));
    if (r < 1.0 && next - std::log1p(-r) < ltol) {
      N = n;
      break;
    }
    if (std::isfinite(next)) log_max = std::max(log_max, next);
    if (n > 100000) throw std::runtime_error("deformed_exp: truncation order search did not terminate");
  }
  const double bits = (log_max - ltol) / std::log(2.0) + std::log2(N + 2.0) + 24.0;
  const auto prec = static_cast<mp_bitcnt_t>(std::max(64.0, std::ceil(bits)));

  mpf_class sum(1, prec), term(1, prec), tp(1, prec);
  const mpf_class th(theta, prec), zz(z, prec);
  for (int n = 0; n < N; ++n) {
    term *= tp;
    term *= zz;
    term /= static_cast<unsigned long>(n + 1);
    tp *= th;
    sum += term;
  }
  return {sum, N};
}

constexpr double kRootEvalTol = 1e-40;

double f_neg(double theta, double z) { return eval_e(theta, -z, kRootEvalTol).value.get_d(); }
int sign_neg(double theta, double z) { return sgn(eval_e(theta, -z, kRootEvalTol).value); }

// Refines a sign change of z -> E(theta, -z) on [lo, hi].
RootResult refine(double theta, double lo, double hi) {
  const int slo = sign_neg(theta, lo);
  while (hi - lo > std::max(1e-13, 4e-16 * hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = sign_neg(theta, mid);
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    (s == slo ? lo : hi) = mid;
  }
  RootResult r;
  r.lo = lo;
  r.hi = hi;
  double z = 0.5 * (lo + hi);
  // one Newton step; d/dz E(theta, -z) = -E(theta, -theta z)
  const double fz = f_neg(theta, z);
  const double dfz = -eval_e(theta, -theta * z, kRootEvalTol).value.get_d();
  if (dfz != 0) {
    const double zn = z - fz / dfz;
    if (zn >= lo && zn <= hi) z = zn;
  }
  r.value = z;
  const MpValue e = eval_e(theta, -z, kRootEvalTol);
  r.residual = std::fabs(e.value.get_d());
  r.truncation_order = e.order;
  return r;
}

}  // namespace

double deformed_exp(double theta, double z, double tol) { return eval_e(theta, z, tol / 10).value.get_d(); }

int deformed_exp_order(double theta, double z, double tol) { return eval_e(theta, z, tol / 10).order; }

RootResult first_negative_root(double theta, double tol) {
  if (!(theta >= -1.0 && theta < 1.0)) throw std::domain_error("first_negative_root: theta must lie in [-1, 1)");
  double z = 0.0;
  const double cap = 1e9;
  while (z < cap) {
    const double next = z + std::max(0.01, 0.005 * z);
    if (sign_neg(theta, next) <= 0) {
      RootResult r = refine(theta, z, next);
      if (r.residual > tol && r.residual > 1e-13 * std::max(1.0, r.value))
        throw std::runtime_error("first_negative_root: residual above tolerance");
      return r;
    }
    z = next;
  }
  throw std::runtime_error("first_negative_root: no sign change below the search cap");
}

std::vector<RootResult> positive_roots(double theta, int K, double tol) {
  if (!(theta > 0 && theta < 1)) throw std::domain_error("positive_roots: theta must lie in (0, 1)");
  if (K < 1) throw std::invalid_argument("positive_roots: K must be >= 1");
  (void)tol;
  const double ratio = std::min(1.02, std::pow(theta, -1.0 / 20.0));
  const double cap = 100.0 * K * std::pow(theta, -(K - 1.0));
  std::vector<RootResult> roots;
  double z = 0.05;
  int s = sign_neg(theta, z);
  while (static_cast<int>(roots.size()) < K && z < cap) {
    const double next = z * ratio;
    const int sn = sign_neg(theta, next);
    if (sn != s) {
      roots.push_back(refine(theta, z, next));
      s = sn;
    }
    z = next;
  }
  if (static_cast<int>(roots.size()) < K)
    throw std::runtime_error("positive_roots: found only " + std::to_string(roots.size()) + " of " +
                             std::to_string(K) + " roots");
  return roots;
}

// ---------------------------------------------------------------- ell

std::vector<Rational> ell_expansion_coefficients(int K) {
  if (K < 0) throw std::invalid_argument("ell_expansion_coefficients: K must be >= 0");
  const auto D = static_cast<std::size_t>(K);
  const int top = K + 2;  // need J~_1 .. J~_{K+2}
  // J_1..J_top truncated to degree K; truncation commutes with the recurrence.
  std::vector<Polynomial> J(static_cast<std::size_t>(top + 1));
  J[1] = Polynomial(1);
  if (top >= 2) J[2] = Polynomial(1);
  for (int m = 0; m + 2 <= top; ++m) {
    Polynomial acc;
    for (int i = 0; i <= m; ++i)
      acc += ((J[i + 1] * J[m + 1 - i]).truncate(D) * Polynomial::geometric(static_cast<std::size_t>(i))).truncate(D) *
             Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)));
    J[m + 2] = acc;
  }
  std::vector<Polynomial> T(static_cast<std::size_t>(top + 1));
  T[1] = Polynomial(1);
  for (int m = 1; m + 1 <= top; ++m) {
    Polynomial acc;
    for (int k = 1; k <= m; ++k) {
      Polynomial term = (J[k + 1] * T[m + 1 - k]).truncate(D) *
                        Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
      if (k % 2 == 1) acc += term;
      else acc -= term;
    }
    T[m + 1] = acc;
  }
  Polynomial s;
  for (int j = 0; j + 1 <= top; ++j) {
    Polynomial term = T[j + 1] / (pow(Rational(2), j) * Rational(factorial(static_cast<unsigned>(j))));
    if (j % 2 == 0) s += term;
    else s -= term;
  }
  std::vector<Rational> a(D + 1);
  for (std::size_t k = 0; k <= D; ++k) a[k] = s[k];
  return a;
}

EllResult limit_ell(double theta, double tol) {
  if (!(theta > 1)) throw std::domain_error("limit_ell: theta must exceed 1 (ell vanishes otherwise)");
  const Rational r = Rational(1) / Rational(theta);
  const bool closed = r <= Rational(1, 2);
  double rho = 0.0;
  if (closed) {
    const double z = first_negative_root(r.get_d()).value;
    rho = 1.0 / (2.0 * (1.0 - r.get_d()) * z);
  }
  // The exact oracle costs about 1.75x per step at 1/theta = 2/3, so window
  // drifts stop at n = 18 and report whatever error bound that gives.
  const int cap = closed ? 4096 : 18;
  for (int N = closed ? 64 : cap; N <= cap; N *= 2) {
    std::vector<Rational> p;
    if (closed) {
      p = j_scaled_values(r, N);
      Rational h(1);
      for (auto& v : p) {
        v *= h;
        h /= 2;
      }
    } else {
      p = oracle_sequence(r, Rational(1), Rational(1), std::min(N, cap));
    }
    const auto n = p.size() - 1;
    const double last = p[n].get_d();
    double q = closed ? rho : p[n].get_d() / p[n - 1].get_d();
    q = std::max(q, p[n].get_d() / p[n - 1].get_d());
    if (!(q < 1)) continue;
    const double tail = last * q / (1 - q);
    Rational S(0);
    for (const auto& v : p) S += v;
    const double Sd = S.get_d() + tail;
    const double err = tail / (Sd * Sd);
    if (err <= tol || N >= cap) {
      if (err > tol && closed) throw std::runtime_error("limit_ell: tail estimate did not reach the tolerance");
      EllResult e;
      e.partial_sum = S;
      e.tail_estimate = tail;
      e.value = 1.0 / Sd;
      e.error_bound = err;
      e.terms = static_cast<int>(n + 1);
      return e;
    }
  }
  throw std::runtime_error("limit_ell: did not converge");
}

// ---------------------------------------------------------------- nu

double nu_function(double theta, double z, const std::vector<RootResult>& roots) {
  const double c = 2.0 * (1.0 - 1.0 / theta);
  const double l1 = c * roots[0].value;
  double L = 1.0 / roots[0].value;
  double inv_sum = 1.0 / roots[0].value;
  for (std::size_t k = 1; k < roots.size(); ++k) {
    const double a = roots[k].value;
    L += (1.0 - z / l1) / (a * (1.0 - z / (c * a)));
    inv_sum += 1.0 / a;
  }
  L += (1.0 - z / l1) * (1.0 - inv_sum);
  return L;
}

RootResult nu_root(double theta, int K, double tol) {
  if (!(theta >= 2)) throw std::domain_error("nu_root: theta must be >= 2");
  if (K < 2) throw std::invalid_argument("nu_root: need K >= 2");
  const auto roots = positive_roots(1.0 / theta, K);
  const double c = 2.0 * (1.0 - 1.0 / theta);
  double lo = c * roots[0].value, hi = c * roots[1].value * (1.0 - 1e-12);
  if (!(nu_function(theta, lo, roots) > 0 && nu_function(theta, hi, roots) < 0))
    throw std::runtime_error("nu_root: no sign change in (lambda_1, lambda_2); increase K");
  RootResult r;
  while (hi - lo > std::max(tol, 1e-15 * hi)) {
    const double mid = 0.5 * (lo + hi);
    (nu_function(theta, mid, roots) > 0 ? lo : hi) = mid;
  }
  r.lo = lo;
  r.hi = hi;
  r.value = 0.5 * (lo + hi);
  r.residual = std::fabs(nu_function(theta, r.value, roots));
  r.truncation_order = K;
  return r;
}

// ---------------------------------------------------------------- rates

RateBundle decay_rate(double theta) {
  RateBundle b;
  b.theta = theta;
  if (theta >= -1 && theta <= 0.5) {
    b.z_root = first_negative_root(theta).value;
    b.lambda = 2.0 * (1.0 - theta) * b.z_root;
    b.inequalities_hold = b.lambda > 1 && (theta >= 0 || b.lambda > 2) && (theta <= 0 || b.lambda < 2);
    return b;
  }
  if (theta < -1) {
    b.z_root = first_negative_root(1.0 / theta).value;
    b.mu = 2.0 * (1.0 - theta) * b.z_root;
    b.lambda = *b.mu;
    b.inequalities_hold = *b.mu > -2.0 * theta;
    const Rational tq(theta);
    double prev = 0, drift = 0;
    for (int n = 25; n <= 30; ++n) {
      const double p = persistence_closed_form({n, tq, Rational(1), Rational(1)}).get_d();
      const double c = 1.0 / (p * std::pow(*b.mu, n));
      if (n > 25) drift = std::max(drift, std::fabs(c / prev - 1.0));
      prev = c;
    }
    b.c_estimate = prev;
    b.c_drift = drift;
    return b;
  }
  if (theta > 1) {
    const double r = 1.0 / theta;
    b.z_root = first_negative_root(r).value;
    b.lambda = 2.0 * (1.0 - r) * b.z_root;
    try {
      b.ell = limit_ell(theta, 1e-14).value;
    } catch (const std::runtime_error&) {
      // window drifts: the sum needs the oracle and may not converge in budget
    }
    if (b.ell) b.inequalities_hold = *b.ell > 0 && *b.ell <= 0.5;
    if (theta >= 2) {
      b.nu = nu_root(theta).value;
      const EllResult e = limit_ell(theta, 1e-18);
      const Rational ell_q = Rational(1) / (e.partial_sum + Rational(e.tail_estimate));
      const Rational tq(theta);
      const double d29 = Rational(persistence_closed_form({29, tq, Rational(1), Rational(1)}) - ell_q).get_d();
      const double d30 = Rational(persistence_closed_form({30, tq, Rational(1), Rational(1)}) - ell_q).get_d();
      b.kappa_estimate = std::log(d29 / d30);
    }
    return b;
  }
  throw std::domain_error("decay_rate: no rate formula for theta in (1/2, 1]");
}

// ---------------------------------------------------------------- Tutte

double tutte_poisson_mass(double theta, double tol) {
  if (!(theta >= -2 && theta < -1)) throw std::domain_error("tutte_poisson: theta must lie in [-2, -1) (finite jump mass needs theta + 1 < 0)");
  return theta * std::log(deformed_exp(theta + 1.0, 1.0 / theta, tol));
}

double tutte_poisson_pmf(double t, double theta, int n, double tol) {
  if (!(t >= 0)) throw std::domain_error("tutte_poisson_pmf: t must be >= 0");
  if (n < 0) throw std::out_of_range("tutte_poisson_pmf: n must be >= 0");
  const double mbar = tutte_poisson_mass(theta, tol);
  if (n == 0) return std::exp(-t * mbar);
  const auto c = j_scaled_values_fp(theta + 1.0, n);
  std::vector<double> s(static_cast<std::size_t>(n + 1)), e(static_cast<std::size_t>(n + 1));
  for (int m = 1; m <= n; ++m) s[m] = c[m - 1] / m;  // J_m(theta+1)/m!
  e[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double acc = 0.0;
    for (int k = 1; k <= m; ++k) acc += k * t * s[k] * e[m - k];
    e[m] = acc / m;
  }
  return std::exp(-t * mbar) * e[n];
}

// ---------------------------------------------------------------- log-convexity

LogConvexity log_convexity_check(const std::vector<Rational>& seq) {
  for (const auto& x : seq)
    if (!(x > 0)) throw std::domain_error("log_convexity_check: entries must be positive");
  LogConvexity v;
  for (std::size_t n = 1; n + 1 < seq.size(); ++n) {
    if (seq[n + 1] * seq[n - 1] < seq[n] * seq[n]) {
      v.holds = false;
      v.first_violation = n;
      break;
    }
  }
  return v;
}

LogConvexity log_convexity_check(const std::vector<double>& seq) {
  for (double x : seq)
    if (!(x > 0)) throw std::domain_error("log_convexity_check: entries must be positive");
  LogConvexity v;
  for (std::size_t n = 1; n + 1 < seq.size(); ++n) {
    if (seq[n + 1] * seq[n - 1] < seq[n] * seq[n]) {
      v.holds = false;
      v.first_violation = n;
      break;
    }
  }
  return v;
}

}  // namespace arpl
