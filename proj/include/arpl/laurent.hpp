#pragma once
/**
 * @file laurent.hpp
 * @brief Laurent polynomials x^shift * p(x) over the rationals.
 *
 * Needed wherever coefficients carry negative powers of theta, e.g. the
 * ratio and Gessel generating functions and the map theta -> 1/theta.
 */

#include "arpl/polynomial.hpp"

namespace arpl {

class Laurent {
 public:
  Laurent() = default;
  Laurent(const Rational& c) : p_(c) {}  // NOLINT
  Laurent(long c) : p_(c) {}              // NOLINT
  Laurent(const Polynomial& p, long shift = 0);

  static Laurent monomial(const Rational& c, long k) { return Laurent(Polynomial(c), k); }
  // p(1/x) as a Laurent polynomial.
  static Laurent reciprocal(const Polynomial& p);

  bool is_zero() const { return p_.is_zero(); }
  // Lowest and highest exponents present; meaningless for zero.
  long low() const { return shift_; }
  long high() const { return shift_ + p_.degree(); }
  Rational coeff(long k) const;
  bool is_polynomial() const { return is_zero() || shift_ >= 0; }
  Polynomial to_polynomial() const;  // throws if a negative power is present

  Rational operator()(const Rational& t) const;
  Laurent derivative() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const Rational& s);
  Laurent& operator/=(const Rational& s);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend Laurent operator*(Laurent a, const Rational& s) { return a *= s; }
  friend Laurent operator*(const Rational& s, Laurent a) { return a *= s; }
  friend Laurent operator/(Laurent a, const Rational& s) { return a /= s; }
  Laurent operator-() const { return Laurent(-p_, shift_); }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.p_ == b.p_ && (a.is_zero() || a.shift_ == b.shift_);
  }

  // Inverse of a nonzero monomial; throws otherwise.
  Laurent unit_inverse() const;

 private:
  void normalize();
  Polynomial p_;
  long shift_ = 0;
};

}  // namespace arpl
