#include "arpl/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace arpl {

Laurent::Laurent(const Polynomial& p, long shift) : p_(p), shift_(shift) { normalize(); }

void Laurent::normalize() {
  if (p_.is_zero()) {
    shift_ = 0;
    return;
  }
  int v = p_.valuation();
  if (v > 0) {
    const auto& c = p_.coefficients();
    p_ = Polynomial(std::vector<Rational>(c.begin() + v, c.end()));
    shift_ += v;
  }
}

Laurent Laurent::reciprocal(const Polynomial& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> rev(p.coefficients().rbegin(), p.coefficients().rend());
  return Laurent(Polynomial(std::move(rev)), -static_cast<long>(p.degree()));
}

Rational Laurent::coeff(long k) const {
  if (is_zero() || k < shift_) return Rational(0);
  return p_[static_cast<std::size_t>(k - shift_)];
}

Polynomial Laurent::to_polynomial() const {
  if (!is_polynomial()) throw std::domain_error("Laurent polynomial has negative powers");
  return p_.shift(static_cast<std::size_t>(shift_));
}

Rational Laurent::operator()(const Rational& t) const {
  if (is_zero()) return Rational(0);
  if (t == 0 && shift_ < 0) throw std::domain_error("Laurent polynomial evaluated at a pole");
  return p_(t) * pow(t, shift_);
}

Laurent Laurent::derivative() const {
  if (is_zero()) return {};
  // d/dx x^s p = x^{s-1} (s p + x p')
  Polynomial q = p_ * Rational(shift_) + p_.derivative().shift(1);
  return Laurent(q, shift_ - 1);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long s = std::min(shift_, o.shift_);
  p_ = p_.shift(static_cast<std::size_t>(shift_ - s)) + o.p_.shift(static_cast<std::size_t>(o.shift_ - s));
  shift_ = s;
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Laurent& o) {
  p_ *= o.p_;
  shift_ += o.shift_;
  normalize();
  return *this;
}

Laurent& Laurent::operator*=(const Rational& s) {
  p_ *= s;
  normalize();
  return *this;
}

Laurent& Laurent::operator/=(const Rational& s) {
  p_ /= s;
  return *this;
}

Laurent Laurent::unit_inverse() const {
  if (p_.degree() != 0) throw std::domain_error("Laurent polynomial is not a unit");
  return monomial(Rational(1) / p_[0], -shift_);
}

}  // namespace arpl
