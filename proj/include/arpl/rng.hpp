#pragma once
/**
 * @file rng.hpp
 * @brief Counter-based 64-bit stream keyed by (seed, stream index).
 *
 * Output k of stream s is a SplitMix64 finalizer applied to
 * key(seed, s) + (k+1) * golden_gamma, so every path owns an independent
 * substream and results do not depend on how paths are split across threads.
 * Satisfies UniformRandomBitGenerator for use with <random> distributions.
 */

#include <cstdint>
#include <limits>

namespace arpl {

class PathRng {
 public:
  using result_type = std::uint64_t;

  PathRng(std::uint64_t seed, std::uint64_t stream) : state_(mix(seed ^ mix(stream + kGamma))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t state_;
};

}  // namespace arpl
