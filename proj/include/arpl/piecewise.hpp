#pragma once
/**
 * @file piecewise.hpp
 * @brief Finitely supported piecewise-polynomial densities with exact
 *        rational breakpoints, and the one-step AR(1) pushforward.
 */

#include <vector>

#include "arpl/polynomial.hpp"
#include "arpl/rational.hpp"

namespace arpl {

class PiecewisePoly {
 public:
  // The zero density (no support).
  PiecewisePoly() = default;
  // breakpoints b_0 < ... < b_m and m pieces; piece i lives on [b_i, b_{i+1}].
  PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

  static PiecewisePoly constant(const Rational& lo, const Rational& hi, const Rational& value);

  bool empty() const { return pieces_.empty(); }
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  std::size_t num_pieces() const { return pieces_.size(); }

  // Zero outside the support. At an interior breakpoint the left piece wins.
  Rational operator()(const Rational& x) const;
  Rational mass() const;

  // Joins adjacent pieces carrying the same polynomial and strips zero
  // pieces at either end of the support.
  PiecewisePoly merged() const;

  friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
    return a.breaks_ == b.breaks_ && a.pieces_ == b.pieces_;
  }

 private:
  std::vector<Rational> breaks_;
  std::vector<Polynomial> pieces_;
};

// One step of Y -> theta*Y + X with X uniform on [-a, b], killed below 0:
//   g(y) = 1/(a+b) * int f(x) 1{y - theta x in [-a, b]} dx  for y >= 0.
PiecewisePoly piecewise_pushforward(const PiecewisePoly& f, const Rational& theta, const Rational& a,
                                    const Rational& b);

}  // namespace arpl
