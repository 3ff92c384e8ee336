#pragma once
// Published coefficient lists and expansion constants used as fixed
// references by `verify`, the unit tests and the acceptance binary.

#include <vector>

#include "arpl/polynomial.hpp"
#include "arpl/rational.hpp"

namespace arpl::reference {

inline Polynomial poly(std::vector<long> c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return Polynomial(std::move(r));
}

// index n -> J_n, n = 1..6
inline std::vector<Polynomial> j_table() {
  return {Polynomial(),
          poly({1}),
          poly({1}),
          poly({2, 1}),
          poly({6, 6, 3, 1}),
          poly({24, 36, 30, 20, 10, 4, 1}),
          poly({120, 240, 270, 240, 180, 120, 70, 35, 15, 5, 1})};
}

// index n -> J~_n, n = 2..6 (index 0 and 1 unused)
inline std::vector<Polynomial> j_tilde_table() {
  return {Polynomial(),
          Polynomial(),
          poly({1}),
          poly({0, -1}),
          poly({0, 0, 3, 1}),
          poly({0, 0, 0, -12, -10, -4, -1}),
          poly({0, 0, 0, 0, 60, 80, 60, 35, 15, 5, 1})};
}

// index n -> J^_n, n = 2..6
inline std::vector<Polynomial> j_hat_table() {
  return {Polynomial(),
          Polynomial(),
          poly({1}),
          poly({4, -1}),
          poly({24, -6, -3, -1}),
          poly({192, -48, -24, -20, -10, -4, -1}),
          poly({1920, -480, -240, -200, -160, -120, -70, -35, -15, -5, -1})};
}

// a_0..a_9 in ell(theta) = sum_k a_k theta^{-k}
inline std::vector<Rational> ell_coefficients() {
  return {make_rational(1, 2),      make_rational(-1, 8),    make_rational(-1, 16),  make_rational(-5, 96),
          make_rational(-1, 24),    make_rational(-5, 128),  make_rational(-7, 192), make_rational(-9, 256),
          make_rational(-107, 3072), make_rational(-641, 18432)};
}

}  // namespace arpl::reference
