#include "arpl/persistence.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "arpl/mr_polynomials.hpp"

namespace arpl {

namespace {

void validate(const PersistenceQuery& q) {
  if (q.n < 0) throw std::out_of_range("persistence: horizon must be >= 0");
  if (!(q.a > 0) || !(q.b > 0)) throw std::invalid_argument("persistence: need a > 0 and b > 0");
}

// t + t^2 + ... + t^{n-1}
Rational power_sum(const Rational& t, int n) {
  Rational s(0), tp(t);
  for (int k = 1; k <= n - 1; ++k) {
    s += tp;
    tp *= t;
  }
  return s;
}

std::string window_message(double lo, double hi) {
  std::ostringstream os;
  os << "no closed form inside the Fibonacci window (" << lo << ", " << hi << "); use the oracle";
  return os.str();
}

}  // namespace

const char* region_name(RegionTag r) {
  switch (r) {
    case RegionTag::ThmMain1: return "ThmMain1";
    case RegionTag::Cor2: return "Cor2";
    case RegionTag::Cor3: return "Cor3";
    default: return "FibonacciWindow";
  }
}

RegionTag region_of(const PersistenceQuery& q) {
  validate(q);
  const Rational& t = q.theta;
  if (t >= -1 && power_sum(t, q.n) <= q.a / q.b) return RegionTag::ThmMain1;
  if (t <= -1) return RegionTag::Cor2;
  if (t > 0 && q.a == q.b && power_sum(Rational(1) / t, q.n) <= 1) return RegionTag::Cor3;
  return RegionTag::FibonacciWindow;
}

NoClosedForm::NoClosedForm(double lo_, double hi_) : std::domain_error(window_message(lo_, hi_)), lo(lo_), hi(hi_) {}

double fibonacci_boundary(int n, double ratio) {
  if (n <= 1) return std::numeric_limits<double>::infinity();
  auto f = [&](double t) {
    double s = 0.0, tp = t;
    for (int k = 1; k <= n - 1; ++k) {
      s += tp;
      tp *= t;
    }
    return s - ratio;
  };
  double lo = 0.0, hi = std::max(1.0, ratio);
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Rational persistence_closed_form(const PersistenceQuery& q) {
  const RegionTag r = region_of(q);
  const Rational scale = pow(q.b / (q.a + q.b), q.n);
  switch (r) {
    case RegionTag::ThmMain1: return scale * j_scaled_values(q.theta, q.n)[static_cast<std::size_t>(q.n)];
    case RegionTag::Cor2:
      return scale * j_tilde_scaled_values(Rational(1) / q.theta, q.n)[static_cast<std::size_t>(q.n)];
    case RegionTag::Cor3: return j_hat_scaled_values(Rational(1) / q.theta, q.n)[static_cast<std::size_t>(q.n)];
    default: {
      const double lo = fibonacci_boundary(q.n, to_double(q.a / q.b));
      const double hi = q.a == q.b ? 1.0 / fibonacci_boundary(q.n, 1.0) : std::numeric_limits<double>::infinity();
      throw NoClosedForm(lo, hi);
    }
  }
}

std::vector<Rational> oracle_sequence(const Rational& theta, const Rational& a, const Rational& b, int nmax) {
  validate({nmax, theta, a, b});
  std::vector<Rational> p(static_cast<std::size_t>(nmax + 1));
  p[0] = 1;
  if (nmax == 0) return p;
  const Rational step = b / (a + b);
  if (theta == 0) {
    for (int k = 1; k <= nmax; ++k) p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k - 1)] * step;
    return p;
  }
  PiecewisePoly f = PiecewisePoly::constant(Rational(0), b, Rational(1) / (a + b));
  p[1] = step;
  for (int k = 2; k <= nmax; ++k) {
    f = piecewise_pushforward(f, theta, a, b);
    p[static_cast<std::size_t>(k)] = f.mass();
  }
  return p;
}

Rational persistence_oracle(const PersistenceQuery& q) {
  return oracle_sequence(q.theta, q.a, q.b, q.n)[static_cast<std::size_t>(q.n)];
}

PiecewisePoly survival_density(const PersistenceQuery& q) {
  validate(q);
  if (q.n == 0) throw std::out_of_range("survival_density: Y_0 = 0 has no density");
  PiecewisePoly f = PiecewisePoly::constant(Rational(0), q.b, Rational(1) / (q.a + q.b));
  for (int k = 2; k <= q.n; ++k) f = piecewise_pushforward(f, q.theta, q.a, q.b);
  return f;
}

Rational persistence(const PersistenceQuery& q) {
  if (region_of(q) == RegionTag::FibonacciWindow) return persistence_oracle(q);
  return persistence_closed_form(q);
}

Rational hitting_pmf_formula(int n, const Rational& theta) {
  if (n < 1) throw std::out_of_range("hitting_pmf_formula: n must be >= 1");
  if (theta == 0) throw std::domain_error("hitting_pmf_formula: theta must be nonzero");
  Rational v = j_tilde_scaled_values(Rational(1) / theta, n)[static_cast<std::size_t>(n)] / pow(Rational(2), n);
  return (n - 1) % 2 == 0 ? v : Rational(-v);
}

Rational hitting_pmf(const PersistenceQuery& q) {
  validate(q);
  if (q.n < 1) throw std::out_of_range("hitting_pmf: n must be >= 1");
  const auto p = oracle_sequence(q.theta, q.a, q.b, q.n);
  Rational v = p[static_cast<std::size_t>(q.n - 1)] - p[static_cast<std::size_t>(q.n)];
  if (q.theta >= 2 && q.a == q.b && v != hitting_pmf_formula(q.n, q.theta))
    throw std::logic_error("first-hitting formula disagrees with the oracle");
  return v;
}

Rational duality_residual(int n, const Rational& theta, DualitySign sign) {
  if (theta == 0) throw std::domain_error("duality_residual: theta must be nonzero");
  if (sign == DualitySign::Alternating && !(theta < 0))
    throw std::domain_error("duality_residual: alternating sum needs theta < 0");
  if (sign == DualitySign::Plain && !(theta > 0)) throw std::domain_error("duality_residual: plain sum needs theta > 0");
  const auto p = oracle_sequence(theta, Rational(1), Rational(1), n);
  const auto r = oracle_sequence(Rational(1) / theta, Rational(1), Rational(1), n);
  Rational s(0);
  for (int k = 0; k <= n; ++k) {
    Rational term = p[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - k)];
    if (sign == DualitySign::Alternating && k % 2 == 1) s -= term;
    else s += term;
  }
  if (sign == DualitySign::Plain) s -= 1;
  return s;
}

}  // namespace arpl
