#pragma once
/**
 * @file montecarlo.hpp
 * @brief Seedable Monte Carlo for AR(1) persistence, duality sums and
 *        hit-or-miss polytope volumes.
 *
 * Each path (or sample point) i draws from PathRng(seed, i), and the only
 * reduction is integer addition, so the serial and OpenMP kernels return
 * identical counts.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arpl/rational.hpp"
#include "arpl/rng.hpp"

namespace arpl {

enum class Exec { Serial, Parallel };

struct InnovationLaw {
  enum class Kind { Uniform, Biexponential, Gaussian, Atomic };
  Kind kind = Kind::Uniform;
  double a = 1, b = 1;  // Uniform on [-a, b]
  double c = 0;         // Atomic: mass 1-c at 0, mass c spread as -Exp(1)
  bool symmetric = true;
  bool continuous = true;

  static InnovationLaw uniform(double a, double b);
  static InnovationLaw biexponential();
  static InnovationLaw gaussian();
  static InnovationLaw atomic(double c);

  std::string name() const;
  double sample(PathRng& rng) const;
};

struct MCEstimate {
  std::int64_t successes = 0;
  std::int64_t trials = 0;
  double point = 0;
  double ci_low = 0, ci_high = 0;  // 95% Wilson interval
  std::uint64_t seed = 0;
};

// Wilson score interval at z = 1.959963984540054.
MCEstimate make_estimate(std::int64_t successes, std::int64_t trials, std::uint64_t seed);

MCEstimate estimate_persistence(double theta, const InnovationLaw& law, int n, std::int64_t trials,
                                std::uint64_t seed, Exec exec = Exec::Parallel);
// Estimates of p_0..p_nmax from the same paths.
std::vector<MCEstimate> estimate_persistence_profile(double theta, const InnovationLaw& law, int nmax,
                                                     std::int64_t trials, std::uint64_t seed,
                                                     Exec exec = Exec::Parallel);

struct IdentityRow {
  int n = 0;
  double sum = 0;       // estimated left side
  double target = 0;    // 0 for the alternating sum, 1 for the plain one
  double residual = 0;  // sum - target
  double std_error = 0;
  bool flagged = false;  // |residual| > 4 std_error
};

struct IdentityReport {
  double theta = 0;
  std::string law;
  bool alternating = false;
  std::vector<IdentityRow> rows;  // n = 1..nmax
  bool all_within = true;
};

// theta < 0: sum (-1)^k p_k(theta) p_{n-k}(1/theta) vs 0.
// theta > 0: sum p_k(theta) p_{n-k}(1/theta) vs 1.
// The two profiles use independent seeds; standard errors come from the
// delta method with the multinomial covariance of nested survival events.
IdentityReport mc_identity_check(double theta, const InnovationLaw& law, int nmax, std::int64_t trials,
                                 std::uint64_t seed, Exec exec = Exec::Parallel);

struct PolytopeSpec {
  enum class Kind { TutteQ, TutteLimit, Cayley, Zigzag };
  Kind kind = Kind::Zigzag;
  int n = 1;
  double q = 1, t = 1;

  static PolytopeSpec tutte_q(int n, double q, double t);
  static PolytopeSpec tutte_limit(int n, double t);
  static PolytopeSpec cayley(int n);
  static PolytopeSpec zigzag(int n);

  std::string name() const;
  // Bounding box [lo_i, hi_i].
  std::vector<double> box_lo() const;
  std::vector<double> box_hi() const;
  bool contains(const std::vector<double>& x) const;
};

struct VolumeEstimate {
  MCEstimate hits;   // hit fraction in the box
  double box_volume = 0;
  double volume = 0;  // hits.point * box_volume
  double ci_low = 0, ci_high = 0;
  Rational exact;     // target volume
  double z_score = 0;
};

Rational polytope_volume_exact(const PolytopeSpec& spec);
VolumeEstimate polytope_volume_mc(const PolytopeSpec& spec, std::int64_t trials, std::uint64_t seed,
                                  Exec exec = Exec::Parallel);

// Common random numbers: survival indicators of the same innovations under
// each theta in thetas (ascending). Returns the number of paths on which the
// indicator decreased along the list, which must be 0 for theta >= 0.
std::int64_t coupling_violations(const std::vector<double>& thetas, const InnovationLaw& law, int n,
                                 std::int64_t trials, std::uint64_t seed);

}  // namespace arpl
