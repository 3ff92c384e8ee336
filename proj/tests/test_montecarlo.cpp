#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "arpl/montecarlo.hpp"
#include "arpl/mr_polynomials.hpp"

using namespace arpl;

namespace {
constexpr std::uint64_t kSeed = 99;

double zscore(const MCEstimate& e, double p) {
  return (e.point - p) / std::sqrt(p * (1 - p) / static_cast<double>(e.trials));
}
}  // namespace

TEST_CASE("counter-based streams") {
  PathRng a(1, 5), b(1, 5), c(1, 6), d(2, 5);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(x != d());
  PathRng u(3, 0);
  double mean = 0;
  for (int i = 0; i < 100000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0);
    CHECK(v < 1);
    mean += v;
  }
  CHECK(mean / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("innovation laws") {
  CHECK_THROWS_AS(InnovationLaw::uniform(0, 1), std::domain_error);
  CHECK_THROWS_AS(InnovationLaw::atomic(1.5), std::domain_error);
  CHECK(InnovationLaw::uniform(1, 1).symmetric);
  CHECK_FALSE(InnovationLaw::uniform(2, 1).symmetric);
  CHECK(InnovationLaw::gaussian().continuous);
  CHECK_FALSE(InnovationLaw::atomic(0.3).continuous);
  // sample moments
  for (const auto& law : {InnovationLaw::gaussian(), InnovationLaw::biexponential(), InnovationLaw::uniform(1, 3)}) {
    double m1 = 0, m2 = 0;
    const int N = 200000;
    for (int i = 0; i < N; ++i) {
      PathRng rng(7, static_cast<std::uint64_t>(i));
      const double x = law.sample(rng);
      m1 += x;
      m2 += x * x;
    }
    m1 /= N;
    m2 /= N;
    const double mean = law.kind == InnovationLaw::Kind::Uniform ? 1.0 : 0.0;
    const double var = law.kind == InnovationLaw::Kind::Gaussian ? 1.0 : law.kind == InnovationLaw::Kind::Uniform ? 16.0 / 12 : 2.0;
    CHECK(std::fabs(m1 - mean) < 5 * std::sqrt(var / N));
    CHECK(m2 - m1 * m1 == doctest::Approx(var).epsilon(0.02));
  }
}

TEST_CASE("Wilson intervals") {
  const auto e = make_estimate(30, 100, 1);
  CHECK(e.point == 0.3);
  CHECK(e.ci_low < 0.3);
  CHECK(e.ci_high > 0.3);
  CHECK(e.ci_low == doctest::Approx(0.2189).epsilon(1e-3));
  CHECK(e.ci_high == doctest::Approx(0.3958).epsilon(1e-3));
  const auto z = make_estimate(0, 1000, 1);
  CHECK(z.ci_low == 0);
  CHECK(z.ci_high > 0);
  const auto f = make_estimate(1000, 1000, 1);
  CHECK(f.ci_high == 1);
  CHECK_THROWS(make_estimate(0, 0, 1));
}

TEST_CASE("serial and parallel kernels give identical counts") {
  const auto law = InnovationLaw::gaussian();
  const auto s = estimate_persistence_profile(0.7, law, 8, 50000, kSeed, Exec::Serial);
  for (int threads : {1, 3, 4}) {
    omp_set_num_threads(threads);
    const auto p = estimate_persistence_profile(0.7, law, 8, 50000, kSeed, Exec::Parallel);
    for (std::size_t k = 0; k < s.size(); ++k) CHECK(s[k].successes == p[k].successes);
  }
  const auto spec = PolytopeSpec::tutte_q(3, 0.5, 1);
  CHECK(polytope_volume_mc(spec, 20000, kSeed, Exec::Serial).hits.successes ==
        polytope_volume_mc(spec, 20000, kSeed, Exec::Parallel).hits.successes);
  CHECK(estimate_persistence(0.7, law, 5, 50000, kSeed).successes == s[5].successes);
}

TEST_CASE("persistence estimates against known values") {
  const std::int64_t N = 1000000;
  CHECK(std::fabs(zscore(estimate_persistence(0, InnovationLaw::uniform(1, 1), 10, N, kSeed), std::ldexp(1.0, -10))) < 4);
  CHECK(std::fabs(zscore(estimate_persistence(1, InnovationLaw::gaussian(), 6, N, kSeed), 924.0 / 4096)) < 4);
  CHECK(std::fabs(zscore(estimate_persistence(-1, InnovationLaw::biexponential(), 4, N, kSeed), 1.0 / 128)) < 4);
  const auto prof = estimate_persistence_profile(0.2, InnovationLaw::uniform(1, 1), 6, 10, kSeed);
  CHECK(prof[0].successes == 10);
  for (std::size_t k = 1; k < prof.size(); ++k) CHECK(prof[k].successes <= prof[k - 1].successes);
  CHECK_THROWS(estimate_persistence(0.5, InnovationLaw::gaussian(), 3, 0, kSeed));
  CHECK_THROWS(estimate_persistence(0.5, InnovationLaw::gaussian(), -1, 10, kSeed));
}

TEST_CASE("duality sums") {
  const auto g = mc_identity_check(-1.7, InnovationLaw::gaussian(), 6, 200000, kSeed);
  CHECK(g.alternating);
  CHECK(g.rows.size() == 6);
  CHECK(g.all_within);
  const auto b = mc_identity_check(2.5, InnovationLaw::biexponential(), 6, 200000, kSeed);
  CHECK_FALSE(b.alternating);
  CHECK(b.all_within);
  for (const auto& row : b.rows) CHECK(row.target == 1);
  // atomic law: the alternating sum equals (1-c)^n (1 + (-1)^n)/2
  const double c = 0.4;
  const auto a = mc_identity_check(-2, InnovationLaw::atomic(c), 4, 200000, kSeed);
  for (const auto& row : a.rows) {
    const double expect = std::pow(1 - c, row.n) * (row.n % 2 == 0 ? 1.0 : 0.0);
    CHECK(std::fabs(row.sum - expect) < 4 * row.std_error + 1e-12);
  }
  CHECK_FALSE(a.all_within);
  CHECK_THROWS_AS(mc_identity_check(0, InnovationLaw::gaussian(), 3, 100, kSeed), std::domain_error);
}

TEST_CASE("polytope membership and boxes") {
  const auto zz = PolytopeSpec::zigzag(4);
  CHECK(zz.contains({0.1, 0.9, 0.2, 0.8}));
  CHECK_FALSE(zz.contains({0.9, 0.1, 0.2, 0.8}));
  const auto cay = PolytopeSpec::cayley(3);
  CHECK(cay.box_hi() == std::vector<double>{2, 4, 8});
  CHECK(cay.contains({1.5, 2.5, 4.0}));
  CHECK_FALSE(cay.contains({1.5, 3.5, 4.0}));
  CHECK_FALSE(cay.contains({0.9, 1.0, 1.0}));
  const auto tq = PolytopeSpec::tutte_q(3, 0.5, 1);
  CHECK(tq.box_lo() == std::vector<double>{0.5, 0.5, 0.5});
  CHECK(tq.contains({1.0, 1.0, 1.0}));
  CHECK_FALSE(tq.contains({1.0, 1.0, 0.4}));
  // q = 1 removes the (1-q) term and gives the limiting constraints from above
  const auto q1 = PolytopeSpec::tutte_q(2, 1, 1);
  CHECK(q1.contains({2.0, 4.0}));
  CHECK_FALSE(q1.contains({2.0, 4.1}));
  CHECK_THROWS_AS(PolytopeSpec::tutte_q(3, 0, 1), std::domain_error);
  CHECK_THROWS_AS(polytope_volume_mc(PolytopeSpec::tutte_limit(3, 0), 10, kSeed), std::domain_error);
}

TEST_CASE("exact polytope volumes") {
  CHECK(polytope_volume_exact(PolytopeSpec::zigzag(4)) == make_rational(5, 24));
  CHECK(polytope_volume_exact(PolytopeSpec::cayley(3)) == make_rational(38, 6));
  CHECK(polytope_volume_exact(PolytopeSpec::tutte_q(3, 0.5, 1)) == make_rational(393, 48));
  // TutteLimit(t) at n = 1 is the interval [1, 1+t]
  CHECK(polytope_volume_exact(PolytopeSpec::tutte_limit(1, 0.5)) == make_rational(1, 2));
  // q = 1 and t = 1: T_{K_{n+1}}(2, 2) = 2^{n(n+1)/2}
  CHECK(polytope_volume_exact(PolytopeSpec::tutte_q(3, 1, 1)) == make_rational(64, 6));
}

TEST_CASE("hit-or-miss volumes") {
  for (const auto& spec : {PolytopeSpec::zigzag(4), PolytopeSpec::cayley(3), PolytopeSpec::tutte_q(3, 0.5, 1),
                           PolytopeSpec::tutte_limit(2, 0.5)}) {
    const auto v = polytope_volume_mc(spec, 400000, kSeed);
    CHECK(std::fabs(v.z_score) < 4);
    CHECK(v.ci_low <= v.volume);
    CHECK(v.volume <= v.ci_high);
  }
}

TEST_CASE("common random numbers: survival is monotone in theta >= 0") {
  const std::vector<double> thetas{0, 0.3, 0.7, 1, 1.5, 2.5};
  CHECK(coupling_violations(thetas, InnovationLaw::gaussian(), 8, 100000, kSeed) == 0);
  CHECK(coupling_violations(thetas, InnovationLaw::uniform(2, 1), 8, 100000, kSeed) == 0);
  CHECK(coupling_violations(thetas, InnovationLaw::biexponential(), 8, 100000, kSeed) == 0);
  // no such ordering for negative drifts
  CHECK(coupling_violations({-1, -0.5}, InnovationLaw::gaussian(), 4, 100000, kSeed) > 0);
}
