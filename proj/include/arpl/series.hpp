#pragma once
/**
 * @file series.hpp
 * @brief Truncated formal power series sum_{n<=N} c_n z^n over an exact ring.
 *
 * The coefficient ring R is Rational, Polynomial (coefficients in theta) or
 * Laurent. Coefficients are stored in the plain z^n basis; from_egf/to_egf
 * convert to and from the z^n/n! basis.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "arpl/laurent.hpp"
#include "arpl/polynomial.hpp"
#include "arpl/rational.hpp"

namespace arpl {

inline Rational unit_inverse(const Rational& c) {
  if (c == 0) throw std::domain_error("series is not invertible: zero constant term");
  return Rational(1) / c;
}

inline Polynomial unit_inverse(const Polynomial& c) {
  if (c.degree() != 0) throw std::domain_error("series is not invertible: constant term is not a unit");
  return Polynomial(Rational(1) / c[0]);
}

inline Laurent unit_inverse(const Laurent& c) {
  if (c.is_zero()) throw std::domain_error("series is not invertible: zero constant term");
  return c.unit_inverse();
}

template <class R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1, R(0)) {}
  TruncatedSeries(std::vector<R> coeffs, std::size_t order) : c_(std::move(coeffs)) { c_.resize(order + 1, R(0)); }

  // c_n = a_n / n!
  static TruncatedSeries from_egf(const std::vector<R>& a, std::size_t order) {
    TruncatedSeries s(order);
    Integer f(1);
    for (std::size_t n = 0; n <= order && n < a.size(); ++n) {
      if (n > 0) f *= static_cast<unsigned long>(n);
      s.c_[n] = a[n] * Rational(1, 1) / Rational(f);
    }
    return s;
  }

  // a_n = n! c_n
  std::vector<R> to_egf() const {
    std::vector<R> a(c_.size(), R(0));
    Integer f(1);
    for (std::size_t n = 0; n < c_.size(); ++n) {
      if (n > 0) f *= static_cast<unsigned long>(n);
      a[n] = c_[n] * Rational(f);
    }
    return a;
  }

  std::size_t order() const { return c_.size() - 1; }
  const R& operator[](std::size_t n) const { return c_.at(n); }
  R& operator[](std::size_t n) { return c_.at(n); }
  const std::vector<R>& coefficients() const { return c_; }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::domain_error("cannot extend a truncated series");
    return TruncatedSeries(std::vector<R>(c_.begin(), c_.begin() + static_cast<long>(order + 1)), order);
  }

  TruncatedSeries derivative() const {
    if (order() == 0) throw std::domain_error("derivative of an order-0 series");
    TruncatedSeries d(order() - 1);
    for (std::size_t n = 1; n < c_.size(); ++n) d.c_[n - 1] = c_[n] * Rational(static_cast<long>(n));
    return d;
  }

  // Zero constant term; order grows by one.
  TruncatedSeries integral() const {
    TruncatedSeries s(order() + 1);
    for (std::size_t n = 0; n < c_.size(); ++n) s.c_[n + 1] = c_[n] / Rational(static_cast<long>(n + 1));
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t N = std::min(a.order(), b.order());
    TruncatedSeries s(N);
    for (std::size_t n = 0; n <= N; ++n) s.c_[n] = a.c_[n] + b.c_[n];
    return s;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t N = std::min(a.order(), b.order());
    TruncatedSeries s(N);
    for (std::size_t n = 0; n <= N; ++n) s.c_[n] = a.c_[n] - b.c_[n];
    return s;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t N = std::min(a.order(), b.order());
    TruncatedSeries s(N);
    const R zero(0);
    for (std::size_t i = 0; i <= N; ++i) {
      if (a.c_[i] == zero) continue;
      for (std::size_t j = 0; i + j <= N; ++j) {
        if (b.c_[j] == zero) continue;
        s.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return s;
  }

  friend TruncatedSeries operator*(TruncatedSeries a, const R& k) {
    for (auto& c : a.c_) c = c * k;
    return a;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<R> c_;
};

template <class R>
TruncatedSeries<R> series_invert(const TruncatedSeries<R>& s) {
  const std::size_t N = s.order();
  TruncatedSeries<R> t(N);
  const R inv0 = unit_inverse(s[0]);
  const R zero(0);
  t[0] = inv0;
  for (std::size_t n = 1; n <= N; ++n) {
    R acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (s[k] == zero) continue;
      acc += s[k] * t[n - k];
    }
    t[n] = -(acc * inv0);
  }
  return t;
}

template <class R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& s) {
  if (!(s[0] == R(1))) throw std::domain_error("series_log needs constant term 1");
  const std::size_t N = s.order();
  TruncatedSeries<R> l(N);
  const R zero(0);
  // n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
  for (std::size_t n = 1; n <= N; ++n) {
    R acc = s[n] * Rational(static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k) {
      if (l[k] == zero || s[n - k] == zero) continue;
      acc -= l[k] * s[n - k] * Rational(static_cast<long>(k));
    }
    l[n] = acc / Rational(static_cast<long>(n));
  }
  return l;
}

template <class R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& s) {
  if (!(s[0] == R(0))) throw std::domain_error("series_exp needs constant term 0");
  const std::size_t N = s.order();
  TruncatedSeries<R> e(N);
  const R zero(0);
  e[0] = R(1);
  // n e_n = sum_{k=1}^n k s_k e_{n-k}
  for (std::size_t n = 1; n <= N; ++n) {
    R acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (s[k] == zero) continue;
      acc += s[k] * e[n - k] * Rational(static_cast<long>(k));
    }
    e[n] = acc / Rational(static_cast<long>(n));
  }
  return e;
}

using RationalSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<Polynomial>;
using LaurentSeries = TruncatedSeries<Laurent>;

}  // namespace arpl
