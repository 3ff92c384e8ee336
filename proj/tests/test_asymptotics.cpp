#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "arpl/asymptotics.hpp"
#include "arpl/mr_polynomials.hpp"
#include "arpl/persistence.hpp"
#include "reference.hpp"

using namespace arpl;

namespace {
Rational r(long p, long q = 1) { return make_rational(p, q); }
const double kPi = std::acos(-1.0);

double p_exact(const Rational& theta, int n) { return to_double(persistence({n, theta, 1, 1})); }
}  // namespace

TEST_CASE("deformed exponential special cases") {
  CHECK(deformed_exp(-1, kPi / 4, 1e-14) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(deformed_exp(0, 3) == 4.0);
  CHECK(deformed_exp(1, 1, 1e-15) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(std::fabs(deformed_exp(-1, 20.0, 1e-12) - (std::cos(20.0) + std::sin(20.0))) < 1e-12);
  CHECK(std::fabs(deformed_exp(1, -30.0, 1e-14) - std::exp(-30.0)) < 1e-14);
  CHECK_THROWS_AS(deformed_exp(1.5, 1), std::domain_error);
  CHECK(deformed_exp_order(0.5, 2.0, 1e-15) < deformed_exp_order(0.9, 2.0, 1e-15));
}

TEST_CASE("deformed exponential agrees with a direct sum where that is safe") {
  for (double theta : {-0.7, 0.3, 0.8})
    for (double z : {-2.0, 0.5, 1.5}) {
      double s = 0, term = 1, tp = 1;  // tp = theta^{n(n-1)/2}
      for (int n = 0; n < 80; ++n) {
        s += tp * term;
        term *= z / (n + 1);
        tp *= std::pow(theta, n);
      }
      CHECK(deformed_exp(theta, z, 1e-14) == doctest::Approx(s).epsilon(1e-12));
    }
}

TEST_CASE("first negative root") {
  const auto m1 = first_negative_root(-1, 1e-12);
  CHECK(std::fabs(m1.value - kPi / 4) < 1e-12);
  CHECK(m1.lo <= m1.value);
  CHECK(m1.value <= m1.hi);
  CHECK(std::fabs(first_negative_root(0, 1e-14).value - 1.0) < 1e-14);
  CHECK_THROWS_AS(first_negative_root(1.0), std::domain_error);
  for (double th : {-0.9, -0.5, 0.25, 0.6}) {
    const auto rr = first_negative_root(th);
    CHECK(rr.residual <= 1e-10);
    CHECK(std::fabs(deformed_exp(th, -rr.value)) <= 1e-10);
  }
}

TEST_CASE("(1 - theta) z_theta is nonincreasing on [-1, 1/2]") {
  double prev = INFINITY;
  for (int k = -20; k <= 10; ++k) {
    const double th = k / 20.0;
    const double v = (1 - th) * first_negative_root(th).value;
    CHECK(v <= prev + 1e-12);
    prev = v;
  }
}

TEST_CASE("positive roots") {
  for (double th : {0.1, 0.25, 0.4}) {
    const auto roots = positive_roots(th, 3);
    CHECK(roots[0].value == doctest::Approx(first_negative_root(th).value).epsilon(1e-10));
    CHECK(roots[0].value < roots[1].value);
    CHECK(roots[1].value < roots[2].value);
  }
  const double th = 0.3;
  const auto roots = positive_roots(th, 12);
  double s0 = 0, s3 = 0;
  for (const auto& a : roots) {
    s0 += 1 / a.value;
    s3 += 1 / (std::pow(1 - th, 3) * std::pow(a.value, 4));
  }
  // a_k grows like k theta^{-(k-1)}: the tail beyond K=12 is below 1e-5
  CHECK(std::fabs(s0 - 1) < 1e-5);
  CHECK(s3 == doctest::Approx(mallows_riordan(4).eval(th) / 6).epsilon(1e-8));
  CHECK_THROWS_AS(positive_roots(1.2, 3), std::domain_error);
}

TEST_CASE("decay rates") {
  const auto m1 = decay_rate(-1);
  CHECK(m1.lambda == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(decay_rate(0).lambda == doctest::Approx(2.0).epsilon(1e-14));
  for (double th : {-1.0, -0.5, -0.1}) CHECK(decay_rate(th).lambda > 2);
  for (double th : {0.1, 0.3, 0.45}) CHECK(decay_rate(th).lambda < 2);
  for (double th : {-1.0, -0.5, 0.0, 0.25, 0.5}) {
    const auto rb = decay_rate(th);
    CHECK(rb.lambda > 1);
    CHECK(rb.inequalities_hold);
  }
  const auto m2 = decay_rate(-2);
  REQUIRE(m2.mu);
  CHECK(*m2.mu > 4);
  REQUIRE(m2.c_drift);
  CHECK(*m2.c_drift < 0.01);
  CHECK_THROWS_AS(decay_rate(0.75), std::domain_error);
}

TEST_CASE("p_n z lambda^n tends to 1") {
  for (const Rational& t : {r(-1), r(-1, 2), r(0), r(1, 4), r(1, 2)}) {
    const double th = to_double(t);
    const auto rb = decay_rate(th);
    const double ratio = p_exact(t, 30) * rb.z_root * std::pow(rb.lambda, 30);
    CHECK(std::fabs(ratio - 1) < 0.02);
  }
  // p_n(-1) ~ 4 / pi^{n+1}
  CHECK(p_exact(-1, 30) * std::pow(kPi, 31) / 4 == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("limit ell") {
  const auto e10 = limit_ell(10);
  CHECK(e10.value > 0.48);
  CHECK(e10.value < 0.5);
  const auto e4 = limit_ell(4, 1e-14);
  double expansion = 0;
  const auto a = ell_expansion_coefficients(25);
  for (int k = 0; k <= 25; ++k) expansion += to_double(a[k]) * std::pow(4.0, -k);
  CHECK(std::fabs(e4.value - expansion) < 1e-8);
  CHECK(e4.error_bound < 1e-14);
  // ell * sum_{n<=N} p_n(1/theta) -> 1 within the tail bound
  CHECK(std::fabs(e4.value * to_double(e4.partial_sum) - 1) <= e4.value * e4.tail_estimate * 1.01 + 1e-15);
  const auto e3 = limit_ell(3, 1e-18);
  const Rational ell3 = 1 / (e3.partial_sum + Rational(e3.tail_estimate));
  Rational prev = 1;
  for (int n = 0; n <= 25; ++n) {
    const Rational gap = persistence({n, 3, 1, 1}) - ell3;
    CHECK(gap > 0);
    CHECK(gap < prev);
    prev = gap;
  }
  for (double th : {1.5, 2.0, 6.0}) {
    const double v = limit_ell(th).value;
    CHECK(v > 0);
    CHECK(v <= 0.5);
  }
  CHECK_THROWS_AS(limit_ell(1.0), std::domain_error);
  CHECK(ell_expansion_coefficients(9) == reference::ell_coefficients());
}

TEST_CASE("nu root") {
  const int K = 12;
  const auto nu = nu_root(4, K);
  const auto roots = positive_roots(0.25, K);
  const double l1 = 2 * 0.75 * roots[0].value, l2 = 2 * 0.75 * roots[1].value;
  CHECK(nu.value > l1);
  CHECK(nu.value < l2);
  CHECK(std::fabs(nu_function(4, nu.value, roots)) < 1e-8);
  CHECK(nu_function(4, 0, roots) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(nu_root(1.5), std::domain_error);
}

TEST_CASE("biexponential q-series") {
  const auto c = qseries_biexp_coefficients(0.5, 8);
  CHECK(c[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(c[1] - 0.5) < 1e-9);
  for (std::size_t n = 1; n < c.size(); ++n) CHECK(c[n] < c[n - 1]);
  // coefficients vs the closed evaluation at a few z
  for (double z : {0.1, 0.3, -0.4}) {
    double s = 0;
    const auto cc = qseries_biexp_coefficients(0.5, 60);
    for (int n = 60; n >= 0; --n) s = s * z + cc[n];
    CHECK(qseries_biexp(0.5, z) == doctest::Approx(s).epsilon(1e-11));
  }
  // theta and 1/theta convolve to 1/(1 - z)
  const auto a = qseries_biexp_coefficients(0.4, 8), b = qseries_biexp_coefficients(2.5, 8);
  for (int n = 0; n <= 8; ++n) {
    double s = 0;
    for (int k = 0; k <= n; ++k) s += a[k] * b[n - k];
    CHECK(std::fabs(s - 1) < 1e-7);
  }
  CHECK(biexp_persistence_nonpositive(-1, 3) == doctest::Approx(1.0 / 32));
  CHECK(biexp_persistence_nonpositive(-1, 4) == doctest::Approx(1.0 / 128));
  CHECK(biexp_persistence_nonpositive(0, 5) == doctest::Approx(1.0 / 32));
  CHECK_THROWS_AS(qseries_biexp(1.0, 0.2), std::domain_error);
  CHECK(qpochhammer(0.0, 0.5) == 1.0);
  CHECK(qpochhammer(0.5, 0.0) == doctest::Approx(0.5));
}

TEST_CASE("compound Poisson Tutte law") {
  const double mbar = tutte_poisson_mass(-2);
  CHECK(mbar == doctest::Approx(-std::log(1 - std::sin(1.0))).epsilon(1e-12));
  CHECK(tutte_poisson_pmf(1, -2, 0) == doctest::Approx(std::exp(-mbar)).epsilon(1e-12));
  double gf = 0;
  for (int n = 0; n <= 80; ++n) gf += tutte_poisson_pmf(1, -2, n) * std::pow(0.5, n);
  CHECK(gf == doctest::Approx((1 - std::sin(1.0)) / (1 - std::sin(0.5))).epsilon(1e-8));
  // the jump law at theta = -3/2 decays slowly; 40 terms leave about 3e-4 of mass
  double s40 = 0, s120 = 0;
  for (int n = 0; n <= 120; ++n) {
    const double v = tutte_poisson_pmf(1, -1.5, n);
    CHECK(v >= 0);
    if (n <= 40) s40 += v;
    s120 += v;
  }
  CHECK(std::fabs(s120 - 1) < 1e-8);
  CHECK(std::fabs(s40 - 1) > 1e-5);
  CHECK_THROWS_AS(tutte_poisson_pmf(1, -0.5, 2), std::domain_error);
}

TEST_CASE("log-convexity diagnostics") {
  std::vector<Rational> geo;
  for (int n = 0; n <= 20; ++n) geo.push_back(pow(r(1, 2), n));
  CHECK(log_convexity_check(geo).holds);
  std::vector<Rational> cat;  // P[T~ = n] at theta = 1
  for (int n = 0; n <= 20; ++n)
    cat.push_back(Rational(binomial(2 * n, n)) / pow(Rational(4), n) -
                  Rational(binomial(2 * n + 2, n + 1)) / pow(Rational(4), n + 1));
  CHECK(log_convexity_check(cat).holds);
  std::vector<Rational> neg;
  for (int n = 1; n <= 20; ++n) neg.push_back(persistence({n, -2, 1, 1}));
  const auto v = log_convexity_check(neg);
  CHECK_FALSE(v.holds);
  REQUIRE(v.first_violation);
  CHECK(*v.first_violation >= 1);
  CHECK(log_convexity_check(std::vector<double>{1.0, 0.5, 0.25}).holds);
  CHECK_FALSE(log_convexity_check(std::vector<double>{1.0, 0.8, 0.2}).holds);
  CHECK_THROWS_AS(log_convexity_check(std::vector<double>{1.0, 0.0}), std::domain_error);
}

TEST_CASE("summability of J_n(theta)/n!") {
  // theta = -1/2: terms decay like (2/lambda)^n with lambda > 2
  const auto rb = decay_rate(-0.5);
  const double q = 2 / rb.lambda;
  CHECK(q < 1);
  const auto c = j_scaled_values(r(-1, 2), 40);
  for (int n = 10; n <= 40; ++n) {
    const double scaled = to_double(c[n]) * rb.z_root / std::pow(q, n);
    CHECK(scaled == doctest::Approx(1.0).epsilon(0.05));
  }
  // theta = 0: J_n(0)/n! = 1/n, so the partial sums are harmonic numbers
  Rational s = 0, h = 0;
  for (int n = 1; n <= 40; ++n) {
    s += mallows_riordan(n)(0) / Rational(factorial(n));
    h += r(1, n);
    CHECK(s == h);
  }
}
