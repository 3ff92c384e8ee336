#include "arpl/mr_polynomials.hpp"

#include <stdexcept>
#include <string>

#include "arpl/laurent.hpp"
#include "arpl/series.hpp"

namespace arpl {

namespace {

void require_index(int n, int min, const char* what) {
  if (n < min) throw std::out_of_range(std::string(what) + ": index " + std::to_string(n) + " out of range");
}

Rational binom_q(int n, int k) { return Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))); }
Rational fact_q(int n) { return Rational(factorial(static_cast<unsigned>(n))); }

Polynomial signed_poly(int k, const Polynomial& p) { return (k % 2 == 0) ? p : -p; }

// (theta^lo + ... + theta^hi)^e / theta^d as a Laurent polynomial; empty sum is 0.
Laurent power_sum_ratio(int lo, int hi, int e, long d) {
  Polynomial base;
  if (hi >= lo) base = Polynomial::geometric(static_cast<std::size_t>(hi - lo)).shift(static_cast<std::size_t>(lo));
  return Laurent(base.pow(static_cast<unsigned>(e)), -d);
}

// Next J from J_1..J_{m+1} (1-based in t, t.size() == m + 2).
Polynomial next_j(const std::vector<const Polynomial*>& t) {
  const int m = static_cast<int>(t.size()) - 2;
  Polynomial acc;
  for (int i = 0; i <= m; ++i)
    acc += (*t[i + 1] * *t[m + 1 - i]) * Polynomial::geometric(static_cast<std::size_t>(i)) * binom_q(m, i);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- cache

const Polynomial& PolyFamilyCache::get(int n) {
  require_index(n, 1, "PolyFamilyCache");
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(table_.size()) < n) {
    const int k = static_cast<int>(table_.size()) + 1;  // member being added
    Polynomial next;
    switch (family_) {
      case Family::J: {
        if (k <= 2) {
          next = Polynomial(1);
        } else {
          std::vector<const Polynomial*> t{nullptr};
          for (auto& p : table_) t.push_back(&p);
          next = next_j(t);
        }
        break;
      }
      case Family::JTilde: {
        const int m = k - 1;
        if (m == 0) {
          next = Polynomial(1);
          break;
        }
        for (int j = 1; j <= m; ++j) {
          const Polynomial& J = mallows_riordan(j + 1);
          next += signed_poly(j - 1, J * table_[static_cast<std::size_t>(m - j)]) * binom_q(m, j);
        }
        break;
      }
      case Family::JHat: {
        const int m = k - 1;
        if (m == 0) {
          next = Polynomial(1);
          break;
        }
        next = table_.back() * Rational(2 * m) + signed_poly(m, j_tilde(m + 1));
        break;
      }
    }
    table_.push_back(std::move(next));
  }
  return table_[static_cast<std::size_t>(n - 1)];
}

int PolyFamilyCache::max_computed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<int>(table_.size());
}

namespace {

PolyFamilyCache& cache(Family f) {
  static PolyFamilyCache j(Family::J), jt(Family::JTilde), jh(Family::JHat);
  switch (f) {
    case Family::J: return j;
    case Family::JTilde: return jt;
    default: return jh;
  }
}

void check_routes(const char* family, int n, const Polynomial& value,
                  std::initializer_list<std::vector<Polynomial> (*)(int)> others) {
  for (auto route : others) {
    auto t = route(n);
    if (!(t[static_cast<std::size_t>(n)] == value))
      throw std::logic_error(std::string("route disagreement for ") + family + "_" + std::to_string(n));
  }
}

}  // namespace

const Polynomial& mallows_riordan(int n, Verify v) {
  require_index(n, 1, "mallows_riordan");
  const Polynomial& p = cache(Family::J).get(n);
  if (v == Verify::On) check_routes("J", n, p, {routes::j_log_e, routes::j_ratio, routes::j_linear, routes::j_gessel});
  return p;
}

const Polynomial& j_tilde(int n, Verify v) {
  require_index(n, 1, "j_tilde");
  const Polynomial& p = cache(Family::JTilde).get(n);
  if (v == Verify::On) check_routes("Jtilde", n, p, {routes::jt_inverse, routes::jt_alternate, routes::jt_exp});
  return p;
}

const Polynomial& j_hat(int n, Verify v) {
  require_index(n, 1, "j_hat");
  const Polynomial& p = cache(Family::JHat).get(n);
  if (v == Verify::On) check_routes("Jhat", n, p, {routes::jh_sum, routes::jh_series});
  return p;
}

Polynomial c_poly(int n) {
  require_index(n, 1, "c_poly");
  const Polynomial& jt = j_tilde(n + 1);
  const auto& c = jt.coefficients();
  std::vector<Rational> out(c.begin() + (n - 1), c.end());
  Polynomial p(std::move(out));
  return (n - 1) % 2 == 0 ? p : -p;
}

Integer zigzag(int n) {
  require_index(n, 0, "zigzag");
  const auto N = static_cast<std::size_t>(n);
  RationalSeries s(N), c(N);
  for (std::size_t k = 0; k <= N; ++k) {
    Rational inv_f = Rational(1) / Rational(factorial(static_cast<unsigned>(k)));
    if (k % 2 == 1) s[k] = (k % 4 == 1) ? inv_f : Rational(-inv_f);
    else c[k] = (k % 4 == 0) ? inv_f : Rational(-inv_f);
  }
  RationalSeries one(N);
  one[0] = 1;
  RationalSeries g = (one + s) * series_invert(c);
  Rational a = g[N] * Rational(factorial(static_cast<unsigned>(n)));
  if (a.get_den() != 1) throw std::logic_error("zigzag number is not an integer");
  return a.get_num();
}

// ---------------------------------------------------------------- routes

namespace routes {

std::vector<Polynomial> j_recurrence(int nmax) {
  require_index(nmax, 1, "j_recurrence");
  std::vector<Polynomial> t(static_cast<std::size_t>(nmax + 1));
  t[1] = Polynomial(1);
  if (nmax >= 2) t[2] = Polynomial(1);
  for (int m = 0; m + 2 <= nmax; ++m) {
    Polynomial acc;
    for (int i = 0; i <= m; ++i)
      acc += (t[i + 1] * t[m + 1 - i]) * Polynomial::geometric(static_cast<std::size_t>(i)) * binom_q(m, i);
    t[m + 2] = acc;
  }
  return t;
}

std::vector<Polynomial> j_log_e(int nmax) {
  require_index(nmax, 1, "j_log_e");
  const auto N = static_cast<std::size_t>(nmax);
  PolySeries E(N);
  for (std::size_t n = 0; n <= N; ++n)
    E[n] = Polynomial::monomial(Rational(1) / fact_q(static_cast<int>(n)), n * (n - 1) / 2);
  PolySeries L = series_log(E);
  std::vector<Polynomial> t(N + 1);
  const Polynomial tm1{-1, 1};
  for (std::size_t n = 1; n <= N; ++n)
    t[n] = (L[n] * fact_q(static_cast<int>(n))).divexact(tm1.pow(static_cast<unsigned>(n - 1)));
  return t;
}

std::vector<Polynomial> j_ratio(int nmax) {
  require_index(nmax, 1, "j_ratio");
  const auto N = static_cast<std::size_t>(nmax - 1);
  LaurentSeries num(N), den(N);
  num[0] = Laurent(1);
  den[0] = Laurent(1);
  if (N >= 1) den[1] = Laurent(-1);
  for (std::size_t n = 2; n <= N; ++n) {
    const int k = static_cast<int>(n);
    const long d = static_cast<long>(n * (n - 1) / 2);
    num[n] = power_sum_ratio(1, k - 1, k, d) / fact_q(k);
    if (n >= 3) den[n] = power_sum_ratio(1, k - 2, k, d) / fact_q(k);
  }
  LaurentSeries r = num * series_invert(den);
  std::vector<Polynomial> t(N + 2);
  for (std::size_t n = 0; n <= N; ++n) t[n + 1] = (r[n] * fact_q(static_cast<int>(n))).to_polynomial();
  return t;
}

std::vector<Polynomial> j_linear(int nmax) {
  require_index(nmax, 1, "j_linear");
  std::vector<Polynomial> t(static_cast<std::size_t>(nmax + 1));
  t[1] = Polynomial(1);
  if (nmax >= 2) t[2] = Polynomial(1);
  for (int n = 2; n + 1 <= nmax; ++n) {
    Laurent acc = power_sum_ratio(1, n - 1, n, n * (n - 1) / 2);
    acc += Laurent(t[n] * Rational(n));
    for (int k = 3; k <= n; ++k)
      acc -= power_sum_ratio(1, k - 2, k, k * (k - 1) / 2) * Laurent(t[n - k + 1]) * binom_q(n, k);
    t[n + 1] = acc.to_polynomial();
  }
  return t;
}

std::vector<Polynomial> j_gessel(int nmax) {
  require_index(nmax, 1, "j_gessel");
  const auto N = static_cast<std::size_t>(nmax - 1);
  LaurentSeries num(N), den(N);
  for (std::size_t n = 0; n <= N; ++n) {
    const int k = static_cast<int>(n);
    const long d = static_cast<long>(n * (n + 1) / 2);
    num[n] = power_sum_ratio(0, k, k, d) / fact_q(k);
    den[n] = (n == 0 ? Laurent(1) : power_sum_ratio(0, k - 1, k, d)) / fact_q(k);
  }
  LaurentSeries r = num * series_invert(den);
  std::vector<Polynomial> t(N + 2);
  for (std::size_t n = 0; n <= N; ++n) t[n + 1] = (r[n] * fact_q(static_cast<int>(n))).to_polynomial();
  return t;
}

std::vector<Polynomial> jt_inverse(int nmax) {
  require_index(nmax, 1, "jt_inverse");
  const auto N = static_cast<std::size_t>(nmax - 1);
  PolySeries s(N);
  for (std::size_t n = 0; n <= N; ++n)
    s[n] = signed_poly(static_cast<int>(n), mallows_riordan(static_cast<int>(n + 1))) / fact_q(static_cast<int>(n));
  PolySeries inv = series_invert(s);
  std::vector<Polynomial> t(N + 2);
  for (std::size_t n = 0; n <= N; ++n) t[n + 1] = inv[n] * fact_q(static_cast<int>(n));
  return t;
}

std::vector<Polynomial> jt_recurrence(int nmax) {
  require_index(nmax, 1, "jt_recurrence");
  std::vector<Polynomial> t(static_cast<std::size_t>(nmax + 1));
  t[1] = Polynomial(1);
  for (int m = 1; m + 1 <= nmax; ++m) {
    Polynomial acc;
    for (int k = 1; k <= m; ++k)
      acc += signed_poly(k - 1, mallows_riordan(k + 1) * t[m + 1 - k]) * binom_q(m, k);
    t[m + 1] = acc;
  }
  return t;
}

std::vector<Polynomial> jt_alternate(int nmax) {
  require_index(nmax, 1, "jt_alternate");
  std::vector<Polynomial> t(static_cast<std::size_t>(nmax + 1));
  t[1] = Polynomial(1);
  for (int m = 0; m + 2 <= nmax; ++m) {
    Polynomial acc;
    for (int k = 0; k <= m; ++k)
      acc += signed_poly(k, mallows_riordan(k + 1) * t[m + 1 - k]) *
             Polynomial::geometric(static_cast<std::size_t>(k)) * binom_q(m, k);
    t[m + 2] = acc;
  }
  return t;
}

std::vector<Polynomial> jt_exp(int nmax) {
  require_index(nmax, 1, "jt_exp");
  const auto N = static_cast<std::size_t>(nmax - 1);
  PolySeries s(N);
  for (std::size_t n = 1; n <= N; ++n) {
    const int k = static_cast<int>(n);
    s[n] = signed_poly(k - 1, mallows_riordan(k) * Polynomial::geometric(n - 1)) / fact_q(k);
  }
  PolySeries e = series_exp(s);
  std::vector<Polynomial> t(N + 2);
  for (std::size_t n = 0; n <= N; ++n) t[n + 1] = e[n] * fact_q(static_cast<int>(n));
  return t;
}

std::vector<Polynomial> jh_sum(int nmax) {
  require_index(nmax, 1, "jh_sum");
  std::vector<Polynomial> t(static_cast<std::size_t>(nmax + 1));
  Polynomial partial;
  for (int m = 0; m + 1 <= nmax; ++m) {
    partial += signed_poly(m, j_tilde(m + 1)) / (pow(Rational(2), m) * fact_q(m));
    t[m + 1] = partial * (pow(Rational(2), m) * fact_q(m));
  }
  return t;
}

std::vector<Polynomial> jh_recurrence(int nmax) {
  require_index(nmax, 1, "jh_recurrence");
  std::vector<Polynomial> t(static_cast<std::size_t>(nmax + 1));
  t[1] = Polynomial(1);
  for (int m = 1; m + 1 <= nmax; ++m) t[m + 1] = t[m] * Rational(2 * m) + signed_poly(m, j_tilde(m + 1));
  return t;
}

std::vector<Polynomial> jh_series(int nmax) {
  require_index(nmax, 1, "jh_series");
  const auto N = static_cast<std::size_t>(nmax - 1);
  PolySeries s(N), geo(N);
  for (std::size_t n = 0; n <= N; ++n) {
    s[n] = mallows_riordan(static_cast<int>(n + 1)) / fact_q(static_cast<int>(n));
    geo[n] = Polynomial(pow(Rational(2), static_cast<long>(n)));
  }
  PolySeries r = geo * series_invert(s);
  std::vector<Polynomial> t(N + 2);
  for (std::size_t n = 0; n <= N; ++n) t[n + 1] = r[n] * fact_q(static_cast<int>(n));
  return t;
}

}  // namespace routes

// ---------------------------------------------------------------- values

std::vector<Rational> j_scaled_values(const Rational& t, int nmax) {
  require_index(nmax, 0, "j_scaled_values");
  const auto N = static_cast<std::size_t>(nmax);
  // c_{n+1} = 1/(n+1) sum_i s_i c_i c_{n-i}, s_i = 1 + t + ... + t^i
  std::vector<Rational> s(N + 1), c(N + 1);
  Rational tp(1);
  for (std::size_t i = 0; i <= N; ++i) {
    s[i] = (i == 0 ? Rational(0) : s[i - 1]) + tp;
    tp *= t;
  }
  c[0] = 1;
  Rational acc, term;
  for (std::size_t n = 0; n < N; ++n) {
    acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      term = s[i] * c[i];
      term *= c[n - i];
      acc += term;
    }
    c[n + 1] = acc / static_cast<long>(n + 1);
  }
  return c;
}

std::vector<Rational> j_tilde_scaled_values(const Rational& t, int nmax) {
  const auto c = j_scaled_values(t, nmax);
  const auto N = static_cast<std::size_t>(nmax);
  // d_n = sum_{k=1}^n (-1)^{k-1} c_k d_{n-k}
  std::vector<Rational> d(N + 1);
  d[0] = 1;
  Rational term;
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      term = c[k] * d[n - k];
      if (k % 2 == 1) acc += term;
      else acc -= term;
    }
    d[n] = acc;
  }
  return d;
}

std::vector<Rational> j_hat_scaled_values(const Rational& t, int nmax) {
  const auto d = j_tilde_scaled_values(t, nmax);
  std::vector<Rational> e(d.size());
  Rational partial(0), p2(1);
  for (std::size_t n = 0; n < d.size(); ++n) {
    if (n % 2 == 0) partial += d[n] / p2;
    else partial -= d[n] / p2;
    e[n] = partial;
    p2 *= 2;
  }
  return e;
}

std::vector<double> j_scaled_values_fp(double t, int nmax) {
  require_index(nmax, 0, "j_scaled_values_fp");
  const auto N = static_cast<std::size_t>(nmax);
  std::vector<double> s(N + 1), c(N + 1);
  double tp = 1.0;
  for (std::size_t i = 0; i <= N; ++i) {
    s[i] = (i == 0 ? 0.0 : s[i - 1]) + tp;
    tp *= t;
  }
  c[0] = 1.0;
  for (std::size_t n = 0; n < N; ++n) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= n; ++i) acc += s[i] * c[i] * c[n - i];
    c[n + 1] = acc / static_cast<double>(n + 1);
  }
  return c;
}

// ---------------------------------------------------------------- Tutte

Rational Bivariate::operator()(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (auto it = by_x.rbegin(); it != by_x.rend(); ++it) {
    acc *= x;
    acc += (*it)(y);
  }
  return acc;
}

bool Bivariate::is_integral() const {
  for (const auto& p : by_x)
    if (!p.is_integral()) return false;
  return true;
}

Bivariate tutte_complete(int n) {
  require_index(n, 0, "tutte_complete");
  const auto N = static_cast<std::size_t>(n);
  Bivariate out;
  out.by_x.assign(N + 1, Polynomial());
  if (n == 0) {
    out.by_x[0] = Polynomial(1);
    return out;
  }
  const Polynomial shift{1, 1};  // theta + 1
  PolySeries S(N);
  for (std::size_t m = 1; m <= N; ++m)
    S[m] = mallows_riordan(static_cast<int>(m)).compose(shift) / fact_q(static_cast<int>(m));
  // T_n = n! sum_k x^k [z^n] S^k / k!
  PolySeries P(N);
  P[0] = Polynomial(1);
  for (std::size_t k = 1; k <= N; ++k) {
    P = P * S;
    out.by_x[k] = P[N] * (fact_q(n) / fact_q(static_cast<int>(k)));
  }
  return out;
}

Bivariate tutte_kn(int n) {
  require_index(n, 1, "tutte_kn");
  const Bivariate T = tutte_complete(n);
  const Polynomial ym1{-1, 1};
  Bivariate out;
  out.by_x.assign(T.by_x.size(), Polynomial());
  // sum_{k>=1} (x-1)^{k-1} P_k(y-1)
  for (std::size_t k = 1; k < T.by_x.size(); ++k) {
    const Polynomial q = T.by_x[k].compose(ym1);
    const int e = static_cast<int>(k - 1);
    for (int j = 0; j <= e; ++j) {
      Rational c = binom_q(e, j);
      if ((e - j) % 2 == 1) c = -c;
      out.by_x[static_cast<std::size_t>(j)] += q * c;
    }
  }
  while (!out.by_x.empty() && out.by_x.back().is_zero()) out.by_x.pop_back();
  return out;
}

Polynomial nested_volume(int n) {
  require_index(n, 1, "nested_volume");
  // F as a polynomial in u with coefficients in theta; start with F = 1.
  std::vector<Polynomial> F{Polynomial(1)};
  for (int step = 0; step < n; ++step) {
    // G(u) = A(theta u) - A(1), A' = F
    std::vector<Polynomial> G(F.size() + 1);
    Polynomial at_one;
    for (std::size_t k = 0; k < F.size(); ++k) {
      Polynomial a = F[k] / Rational(static_cast<long>(k + 1));
      at_one += a;
      G[k + 1] = a.shift(k + 1);
    }
    G[0] = -at_one;
    F = std::move(G);
  }
  Polynomial v;
  for (const auto& c : F) v += c;
  return v;
}

BoundaryDerivatives boundary_derivatives(int n) {
  require_index(n, 2, "boundary_derivatives");
  const Rational D = pow(Rational(2), n) * fact_q(n);
  const Rational m1(-1);
  const Polynomial& J = mallows_riordan(n + 1);
  const Laurent L = Laurent::reciprocal(j_tilde(n + 1));
  const Laurent L1 = L.derivative();
  BoundaryDerivatives b;
  b.right_p1 = J.derivative()(m1) / D;
  b.right_p2 = J.derivative().derivative()(m1) / D;
  b.left_p1 = L1(m1) / D;
  b.left_p2 = L1.derivative()(m1) / D;
  return b;
}

std::vector<NegativeWitness> scan_negative_j(int nmax, const std::vector<Rational>& grid) {
  std::vector<NegativeWitness> found;
  for (int n = 1; n <= nmax; ++n) {
    const Polynomial& J = mallows_riordan(n);
    for (const auto& t : grid) {
      if (!(t < -1)) continue;
      Rational v = J(t);
      if (v < 0) {
        found.push_back({n, t, v});
        break;
      }
    }
  }
  return found;
}

}  // namespace arpl
