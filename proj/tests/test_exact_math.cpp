#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arpl/laurent.hpp"
#include "arpl/mr_polynomials.hpp"
#include "arpl/piecewise.hpp"
#include "arpl/rational.hpp"
#include "arpl/serialize.hpp"
#include "arpl/series.hpp"

using namespace arpl;

namespace {
Rational r(long p, long q = 1) { return make_rational(p, q); }

RationalSeries random_unit_series(std::mt19937& gen, std::size_t order) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Rational> c(order + 1);
  for (auto& x : c) x = make_rational(d(gen), 1 + std::abs(d(gen)));
  c[0] = 1;
  return RationalSeries(c, order);
}
}  // namespace

TEST_CASE("rationals stay canonical and parse every accepted spelling") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(parse_rational("4/5") == r(4, 5));
  CHECK(parse_rational("-0.25") == r(-1, 4));
  CHECK(parse_rational("1e-3") == r(1, 1000));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("abc"));
  CHECK(pow(r(2, 3), -2) == r(9, 4));
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(12, 6) == 924);
}

TEST_CASE("polynomials: canonical form, arithmetic and division") {
  const Polynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(Polynomial().degree() == -1);
  const Polynomial q{-1, 1};
  const auto prod = p * q;
  CHECK(prod == Polynomial{-1, -1, 2});
  auto [quo, rem] = prod.divmod(q);
  CHECK(quo == p);
  CHECK(rem == Polynomial());
  CHECK(prod.divexact(p) == q);
  CHECK(Polynomial{1, 1}.pow(3) == Polynomial{1, 3, 3, 1});
  CHECK(Polynomial{0, 0, 1}.compose(Polynomial{1, 1}) == Polynomial{1, 2, 1});
  CHECK(Polynomial{1, 0, 3}.compose_linear(r(2), r(1)) == Polynomial{1, 0, 3}.compose(Polynomial{1, 2}));
  CHECK(Polynomial{0, 0, 3}.antiderivative().derivative() == Polynomial{0, 0, 3});
  CHECK(Polynomial::geometric(3) == Polynomial{1, 1, 1, 1});
  CHECK(Polynomial{0, 0, 5, 1}.valuation() == 2);
  CHECK(Polynomial{2, 1}(r(1, 2)) == r(5, 2));
  CHECK(Polynomial{2, 1}[7] == 0);
}

TEST_CASE("laurent polynomials: reciprocal and evaluation") {
  const Polynomial p{0, 0, 3, 1};  // 3x^2 + x^3
  const Laurent l = Laurent::reciprocal(p);
  CHECK(l.low() == -3);
  CHECK(l.high() == -2);
  CHECK(l(r(-2)) == p(r(-1, 2)));
  CHECK(l.derivative()(r(3)) == r(-6, 27) - r(3, 81));
  CHECK_THROWS(l.to_polynomial());
  CHECK((Laurent(Polynomial{1, 1}, 0)).is_polynomial());
}

TEST_CASE("series inversion") {
  SUBCASE("geometric series") {
    const auto inv = series_invert(RationalSeries({1, -1}, 8));
    for (std::size_t n = 0; n <= 8; ++n) CHECK(inv[n] == 1);
  }
  SUBCASE("identity") { CHECK(series_invert(RationalSeries({1}, 5)) == RationalSeries({1}, 5)); }
  SUBCASE("zero constant term is rejected") { CHECK_THROWS(series_invert(RationalSeries({0, 1}, 4))); }
  SUBCASE("alternating J series at theta=-1 inverts to zigzag numbers") {
    std::vector<Rational> a;
    for (int n = 0; n <= 10; ++n) a.push_back((n % 2 ? -1 : 1) * mallows_riordan(n + 1)(-1));
    const auto inv = series_invert(RationalSeries::from_egf(a, 10)).to_egf();
    for (int n = 0; n <= 10; ++n) CHECK(inv[n] == Rational(zigzag(n)));
  }
  SUBCASE("double inversion is the identity") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = random_unit_series(gen, 9);
      CHECK(series_invert(series_invert(s)) == s);
      const auto prod = s * series_invert(s);
      CHECK(prod[0] == 1);
      for (std::size_t n = 1; n <= 9; ++n) CHECK(prod[n] == 0);
    }
  }
}

TEST_CASE("series log and exp") {
  SUBCASE("exp(log(1+z)) = 1+z") {
    const RationalSeries s({1, 1}, 12);
    CHECK(series_exp(series_log(s)) == s);
  }
  SUBCASE("mutually inverse on random inputs") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = random_unit_series(gen, 8);
      CHECK(series_exp(series_log(s)) == s);
      auto t = s;
      t[0] = 0;
      CHECK(series_log(series_exp(t)) == t);
    }
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(series_log(RationalSeries({2, 1}, 3)), std::domain_error);
    CHECK_THROWS_AS(series_exp(RationalSeries({1, 1}, 3)), std::domain_error);
  }
  SUBCASE("log of the deformed exponential at several rational theta") {
    for (const Rational& theta : {r(1, 2), r(-3), r(2, 7)}) {
      std::vector<Rational> e;
      for (int n = 0; n <= 6; ++n) e.push_back(pow(theta, n * (n - 1) / 2));
      const auto l = series_log(RationalSeries::from_egf(e, 6)).to_egf();
      for (int n = 1; n <= 6; ++n) CHECK(l[n] == pow(theta - 1, n - 1) * mallows_riordan(n)(theta));
    }
  }
  SUBCASE("exp route reproduces J_{n+1}/n!") {
    const Rational theta = r(3, 5);
    std::vector<Rational> a{0};
    for (int n = 1; n <= 8; ++n) a.push_back(mallows_riordan(n)(theta) * Polynomial::geometric(n - 1)(theta));
    const auto e = series_exp(RationalSeries::from_egf(a, 8)).to_egf();
    for (int n = 0; n <= 8; ++n) CHECK(e[n] == mallows_riordan(n + 1)(theta));
  }
  SUBCASE("product order is the smaller input order") {
    CHECK((RationalSeries({1, 1}, 3) * RationalSeries({1, 1}, 5)).order() == 3);
  }
}

TEST_CASE("piecewise densities") {
  const auto u = PiecewisePoly::constant(0, 1, 1);
  CHECK(u.mass() == 1);
  CHECK(u(r(1, 2)) == 1);
  CHECK(u(r(2)) == 0);
  CHECK_THROWS(PiecewisePoly({r(1), r(0)}, {Polynomial{1}}));

  SUBCASE("theta=0 halves the mass") {
    const auto g = piecewise_pushforward(u, 0, 1, 1);
    CHECK(g == PiecewisePoly::constant(0, 1, r(1, 2)));
    CHECK(g.mass() == r(1, 2));
  }
  SUBCASE("random walk step from the start sub-density") {
    const auto start = PiecewisePoly::constant(0, 1, r(1, 2));
    CHECK(piecewise_pushforward(start, 1, 1, 1).mass() == r(3, 8));
  }
  SUBCASE("two steps at theta=1/2") {
    auto f = PiecewisePoly::constant(0, 1, r(1, 2));
    f = piecewise_pushforward(f, r(1, 2), 1, 1);
    f = piecewise_pushforward(f, r(1, 2), 1, 1);
    CHECK(f.mass() == r(79, 384));
  }
  SUBCASE("mass never increases and breakpoints stay sorted") {
    for (const Rational& theta : {r(-5, 2), r(-1), r(1, 3), r(6, 5), r(3)}) {
      auto f = PiecewisePoly::constant(0, 1, r(1, 2));
      for (int k = 0; k < 6; ++k) {
        auto g = piecewise_pushforward(f, theta, 1, 1);
        CHECK(g.mass() <= f.mass());
        CHECK(g.mass() >= 0);
        for (std::size_t i = 1; i < g.breakpoints().size(); ++i) CHECK(g.breakpoints()[i - 1] < g.breakpoints()[i]);
        f = g;
      }
    }
  }
  SUBCASE("empty input and degenerate law") {
    CHECK(piecewise_pushforward(PiecewisePoly(), 2, 1, 1).empty());
    CHECK_THROWS_AS(piecewise_pushforward(u, 1, 1, -1), std::domain_error);
  }
}

TEST_CASE("json round trips") {
  CHECK(rational_to_json(r(-3, 7)) == "-3/7");
  CHECK(rational_from_json(Json("5")) == 5);
  const Polynomial p{3, 0, -2};
  CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  const PiecewisePoly f({r(0), r(1, 2), r(2)}, {Polynomial{1, 1}, Polynomial{r(1, 3)}});
  CHECK(piecewise_from_json(piecewise_to_json(f)) == f);
}
