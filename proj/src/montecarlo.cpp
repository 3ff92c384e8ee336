#include "arpl/montecarlo.hpp"

#include <omp.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "arpl/mr_polynomials.hpp"

namespace arpl {

// ---------------------------------------------------------------- laws

InnovationLaw InnovationLaw::uniform(double a, double b) {
  if (!(a > 0) || !(b > 0)) throw std::domain_error("uniform law needs a > 0 and b > 0");
  InnovationLaw l;
  l.kind = Kind::Uniform;
  l.a = a;
  l.b = b;
  l.symmetric = a == b;
  return l;
}

InnovationLaw InnovationLaw::biexponential() {
  InnovationLaw l;
  l.kind = Kind::Biexponential;
  return l;
}

InnovationLaw InnovationLaw::gaussian() {
  InnovationLaw l;
  l.kind = Kind::Gaussian;
  return l;
}

InnovationLaw InnovationLaw::atomic(double c) {
  if (!(c >= 0 && c <= 1)) throw std::domain_error("atomic law needs c in [0, 1]");
  InnovationLaw l;
  l.kind = Kind::Atomic;
  l.c = c;
  l.symmetric = false;
  l.continuous = false;
  return l;
}

std::string InnovationLaw::name() const {
  switch (kind) {
    case Kind::Uniform: return "uniform";
    case Kind::Biexponential: return "biexponential";
    case Kind::Gaussian: return "gaussian";
    default: return "atomic";
  }
}

double InnovationLaw::sample(PathRng& rng) const {
  switch (kind) {
    case Kind::Uniform: return -a + (a + b) * rng.uniform();
    case Kind::Gaussian: return std::normal_distribution<double>{}(rng);
    case Kind::Biexponential: {
      const bool neg = (rng() >> 63) != 0;
      const double e = std::exponential_distribution<double>{}(rng);
      return neg ? -e : e;
    }
    default: {
      if (rng.uniform() < 1.0 - c) return 0.0;
      return -std::exponential_distribution<double>{}(rng);
    }
  }
}

// ---------------------------------------------------------------- estimates

MCEstimate make_estimate(std::int64_t successes, std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("Monte Carlo needs trials >= 1");
  constexpr double z = 1.959963984540054;
  const double N = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / N;
  const double denom = 1.0 + z * z / N;
  const double center = (p + z * z / (2 * N)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / N + z * z / (4 * N * N)) / denom;
  MCEstimate e;
  e.successes = successes;
  e.trials = trials;
  e.point = p;
  e.ci_low = std::max(0.0, std::min(p, center - half));
  e.ci_high = std::min(1.0, std::max(p, center + half));
  e.seed = seed;
  return e;
}

namespace {

// Number of leading steps with Y_k >= 0, capped at nmax.
int survival_length(double theta, const InnovationLaw& law, int nmax, std::uint64_t seed, std::int64_t path) {
  PathRng rng(seed, static_cast<std::uint64_t>(path));
  double y = 0.0;
  for (int k = 1; k <= nmax; ++k) {
    y = theta * y + law.sample(rng);
    if (y < 0) return k - 1;
  }
  return nmax;
}

std::vector<std::int64_t> survival_histogram(double theta, const InnovationLaw& law, int nmax, std::int64_t trials,
                                             std::uint64_t seed, Exec exec) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(nmax + 1), 0);
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < trials; ++i) ++hist[static_cast<std::size_t>(survival_length(theta, law, nmax, seed, i))];
    return hist;
  }
#pragma omp parallel
  {
    std::vector<std::int64_t> local(hist.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < trials; ++i) ++local[static_cast<std::size_t>(survival_length(theta, law, nmax, seed, i))];
#pragma omp critical
    for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += local[k];
  }
  return hist;
}

void check_mc_args(int n, std::int64_t trials) {
  if (n < 0) throw std::out_of_range("Monte Carlo horizon must be >= 0");
  if (trials < 1) throw std::invalid_argument("Monte Carlo needs trials >= 1");
}

}  // namespace

std::vector<MCEstimate> estimate_persistence_profile(double theta, const InnovationLaw& law, int nmax,
                                                     std::int64_t trials, std::uint64_t seed, Exec exec) {
  check_mc_args(nmax, trials);
  if (law.kind == InnovationLaw::Kind::Uniform && !(law.a > 0 && law.b > 0))
    throw std::domain_error("uniform law needs a > 0 and b > 0");
  const auto hist = survival_histogram(theta, law, nmax, trials, seed, exec);
  std::vector<MCEstimate> out(hist.size());
  std::int64_t tail = 0;
  for (std::size_t k = hist.size(); k-- > 0;) {
    tail += hist[k];
    out[k] = make_estimate(tail, trials, seed);
  }
  return out;
}

MCEstimate estimate_persistence(double theta, const InnovationLaw& law, int n, std::int64_t trials,
                                std::uint64_t seed, Exec exec) {
  return estimate_persistence_profile(theta, law, n, trials, seed, exec)[static_cast<std::size_t>(n)];
}

IdentityReport mc_identity_check(double theta, const InnovationLaw& law, int nmax, std::int64_t trials,
                                 std::uint64_t seed, Exec exec) {
  if (theta == 0) throw std::domain_error("mc_identity_check: theta must be nonzero");
  check_mc_args(nmax, trials);
  const auto A = estimate_persistence_profile(theta, law, nmax, trials, seed, exec);
  const auto B = estimate_persistence_profile(1.0 / theta, law, nmax, trials, seed ^ 0x5bd1e995ULL, exec);
  std::vector<double> p(A.size()), q(B.size());
  for (std::size_t k = 0; k < A.size(); ++k) {
    p[k] = A[k].point;
    q[k] = B[k].point;
  }
  const double N = static_cast<double>(trials);
  auto cov = [N](const std::vector<double>& v, int k, int j) {
    return (v[static_cast<std::size_t>(std::max(k, j))] - v[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(j)]) / N;
  };

  IdentityReport rep;
  rep.theta = theta;
  rep.law = law.name();
  rep.alternating = theta < 0;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<double> s(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(k)] = (rep.alternating && k % 2 == 1) ? -1.0 : 1.0;
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) sum += s[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(n - k)];
    // dS/dp_k = s_k q_{n-k}, dS/dq_m = s_{n-m} p_{n-m}
    double var = 0.0;
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j) {
        const double gk = s[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(n - k)];
        const double gj = s[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(n - j)];
        const double hk = s[static_cast<std::size_t>(n - k)] * p[static_cast<std::size_t>(n - k)];
        const double hj = s[static_cast<std::size_t>(n - j)] * p[static_cast<std::size_t>(n - j)];
        var += gk * gj * cov(p, k, j) + hk * hj * cov(q, k, j);
      }
    IdentityRow row;
    row.n = n;
    row.sum = sum;
    row.target = rep.alternating ? 0.0 : 1.0;
    row.residual = sum - row.target;
    row.std_error = std::sqrt(std::max(var, 0.0));
    row.flagged = std::fabs(row.residual) > 4.0 * row.std_error;
    if (row.flagged) rep.all_within = false;
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------- polytopes

PolytopeSpec PolytopeSpec::tutte_q(int n, double q, double t) {
  if (!(q > 0 && q <= 1) || !(t >= 0)) throw std::domain_error("TutteQ needs q in (0, 1] and t >= 0");
  return {Kind::TutteQ, n, q, t};
}

PolytopeSpec PolytopeSpec::tutte_limit(int n, double t) {
  if (!(t >= 0)) throw std::domain_error("TutteLimit needs t >= 0");
  return {Kind::TutteLimit, n, 0, t};
}

PolytopeSpec PolytopeSpec::cayley(int n) { return {Kind::Cayley, n, 0, 1}; }
PolytopeSpec PolytopeSpec::zigzag(int n) { return {Kind::Zigzag, n, 0, 0}; }

std::string PolytopeSpec::name() const {
  switch (kind) {
    case Kind::TutteQ: return "tutte_q";
    case Kind::TutteLimit: return "tutte_limit";
    case Kind::Cayley: return "cayley";
    default: return "zigzag";
  }
}

std::vector<double> PolytopeSpec::box_lo() const {
  const double lo = kind == Kind::Zigzag ? 0.0 : kind == Kind::TutteQ ? 1.0 - q : 1.0;
  return std::vector<double>(static_cast<std::size_t>(n), lo);
}

std::vector<double> PolytopeSpec::box_hi() const {
  std::vector<double> hi(static_cast<std::size_t>(n), 1.0);
  if (kind == Kind::Zigzag) return hi;
  double v = 1.0;
  for (auto& h : hi) {
    v *= 1.0 + t;
    h = v;
  }
  return hi;
}

bool PolytopeSpec::contains(const std::vector<double>& x) const {
  const auto N = x.size();
  switch (kind) {
    case Kind::Zigzag:
      for (std::size_t i = 0; i + 1 < N; ++i)
        if ((i % 2 == 0) ? !(x[i] < x[i + 1]) : !(x[i] > x[i + 1])) return false;
      return true;
    case Kind::TutteLimit:
    case Kind::Cayley: {
      double prev = 1.0;
      for (std::size_t i = 0; i < N; ++i) {
        if (x[i] < 1.0 || x[i] > (1.0 + t) * prev) return false;
        prev = x[i];
      }
      return true;
    }
    default: {
      if (x[N - 1] < 1.0 - q) return false;
      // for fixed j the binding constraint uses the smallest x_{i-1}, i <= j
      double prev = 1.0, smallest = 1.0;
      for (std::size_t j = 0; j < N; ++j) {
        if (q * x[j] > q * (1.0 + t) * prev - t * (1.0 - q) * (1.0 - smallest)) return false;
        prev = x[j];
        smallest = std::min(smallest, x[j]);
      }
      return true;
    }
  }
}

Rational polytope_volume_exact(const PolytopeSpec& spec) {
  if (spec.n < 1) throw std::out_of_range("polytope dimension must be >= 1");
  const Rational nf(factorial(static_cast<unsigned>(spec.n)));
  switch (spec.kind) {
    case PolytopeSpec::Kind::Zigzag: return Rational(zigzag(spec.n)) / nf;
    case PolytopeSpec::Kind::TutteLimit:
    case PolytopeSpec::Kind::Cayley: {
      const Rational t(spec.t);
      return pow(t, spec.n) * tutte_kn(spec.n + 1)(Rational(1), 1 + t) / nf;
    }
    default: {
      const Rational t(spec.t), q(spec.q);
      if (t == 0) return Rational(0);
      return pow(t, spec.n) * tutte_kn(spec.n + 1)(1 + q / t, 1 + t) / nf;
    }
  }
}

VolumeEstimate polytope_volume_mc(const PolytopeSpec& spec, std::int64_t trials, std::uint64_t seed, Exec exec) {
  if (spec.n < 1) throw std::out_of_range("polytope dimension must be >= 1");
  if (trials < 1) throw std::invalid_argument("Monte Carlo needs trials >= 1");
  const auto lo = spec.box_lo(), hi = spec.box_hi();
  double box = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) box *= hi[i] - lo[i];
  if (!(box > 0)) throw std::domain_error("polytope bounding box has zero volume");

  auto hit = [&](std::int64_t i, std::vector<double>& x) {
    PathRng rng(seed, static_cast<std::uint64_t>(i));
    for (std::size_t d = 0; d < x.size(); ++d) x[d] = lo[d] + (hi[d] - lo[d]) * rng.uniform();
    return spec.contains(x);
  };
  std::int64_t hits = 0;
  if (exec == Exec::Serial) {
    std::vector<double> x(lo.size());
    for (std::int64_t i = 0; i < trials; ++i) hits += hit(i, x);
  } else {
#pragma omp parallel reduction(+ : hits)
    {
      std::vector<double> x(lo.size());
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < trials; ++i) hits += hit(i, x);
    }
  }
  VolumeEstimate v;
  v.hits = make_estimate(hits, trials, seed);
  v.box_volume = box;
  v.volume = v.hits.point * box;
  v.ci_low = v.hits.ci_low * box;
  v.ci_high = v.hits.ci_high * box;
  v.exact = polytope_volume_exact(spec);
  const double p = v.hits.point;
  const double se = std::sqrt(std::max(p * (1 - p), 1e-300) / static_cast<double>(trials)) * box;
  v.z_score = (v.volume - v.exact.get_d()) / se;
  return v;
}

std::int64_t coupling_violations(const std::vector<double>& thetas, const InnovationLaw& law, int n,
                                 std::int64_t trials, std::uint64_t seed) {
  check_mc_args(n, trials);
  std::int64_t bad = 0;
#pragma omp parallel reduction(+ : bad)
  {
    std::vector<double> xs(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < trials; ++i) {
      PathRng rng(seed, static_cast<std::uint64_t>(i));
      for (auto& x : xs) x = law.sample(rng);
      bool prev = false;
      for (std::size_t j = 0; j < thetas.size(); ++j) {
        double y = 0.0;
        bool alive = true;
        for (double x : xs) {
          y = thetas[j] * y + x;
          if (y < 0) {
            alive = false;
            break;
          }
        }
        if (j > 0 && prev && !alive) {
          ++bad;
          break;
        }
        prev = alive;
      }
    }
  }
  return bad;
}

}  // namespace arpl
