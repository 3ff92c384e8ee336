#pragma once
/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficients are stored in ascending degree and kept trimmed, so the zero
 * polynomial has an empty coefficient vector and degree -1.
 */

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "arpl/rational.hpp"

namespace arpl {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial monomial(const Rational& c, std::size_t k);
  static Polynomial x() { return monomial(Rational(1), 1); }
  // 1 + x + ... + x^k
  static Polynomial geometric(std::size_t k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;
  std::size_t size() const { return c_.size(); }
  // Zero beyond the degree.
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const;
  bool is_integral() const;

  Rational operator()(const Rational& t) const;
  double eval(double t) const;

  Polynomial derivative() const;
  // Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  // p(q(x))
  Polynomial compose(const Polynomial& q) const;
  // p(alpha*x + beta), cheaper than compose for linear maps.
  Polynomial compose_linear(const Rational& alpha, const Rational& beta) const;
  // Drops all terms of degree > max_degree.
  Polynomial truncate(std::size_t max_degree) const;
  // x^k * p
  Polynomial shift(std::size_t k) const;
  Polynomial pow(unsigned e) const;

  // Quotient and remainder of Euclidean division; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  // Throws std::domain_error if d does not divide *this.
  Polynomial divexact(const Polynomial& d) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial& operator/=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace arpl
