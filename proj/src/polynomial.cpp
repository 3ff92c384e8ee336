#include "arpl/polynomial.hpp"

#include <stdexcept>

namespace arpl {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  Polynomial p;
  p.c_ = std::move(v);
  return p;
}

Polynomial Polynomial::geometric(std::size_t k) {
  Polynomial p;
  p.c_.assign(k + 1, Rational(1));
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Polynomial::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

bool Polynomial::is_integral() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

double Polynomial::eval(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (c_.empty()) return {};
  std::vector<Rational> a(c_.size() + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<long>(k + 1);
  return Polynomial(std::move(a));
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::compose_linear(const Rational& alpha, const Rational& beta) const {
  if (c_.empty()) return {};
  // Horner in place: acc <- acc*(alpha x + beta) + c_k.
  std::vector<Rational> acc(c_.size());
  std::size_t len = 0;
  Rational t;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    // multiply acc[0..len) by (alpha x + beta)
    if (len > 0) {
      acc[len] = acc[len - 1] * alpha;
      for (std::size_t k = len - 1; k > 0; --k) {
        acc[k] *= beta;
        t = acc[k - 1] * alpha;
        acc[k] += t;
      }
      acc[0] *= beta;
    }
    ++len;
    acc[0] += *it;
  }
  return Polynomial(std::move(acc));
}

Polynomial Polynomial::truncate(std::size_t max_degree) const {
  if (c_.size() <= max_degree + 1) return *this;
  return Polynomial(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(max_degree + 1)));
}

Polynomial Polynomial::shift(std::size_t k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<Rational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  Polynomial p;
  p.c_ = std::move(v);
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1), base(*this);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial(), *this};
  std::vector<Rational> r = c_;
  std::vector<Rational> q(c_.size() - d.c_.size() + 1);
  const Rational& lead = d.c_.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational f = r[i + d.c_.size() - 1] / lead;
    q[i] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[i + j] -= f * d.c_[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::divexact(const Polynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      t = a.c_[i] * b.c_[j];
      out[i + j] += t;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s) {
  if (s == 0) throw std::domain_error("polynomial divided by zero scalar");
  for (auto& c : c_) c /= s;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

}  // namespace arpl
