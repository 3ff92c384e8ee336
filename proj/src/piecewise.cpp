#include "arpl/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace arpl {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.empty() && breaks_.size() <= 1) {
    breaks_.clear();
    return;
  }
  if (breaks_.size() != pieces_.size() + 1)
    throw std::invalid_argument("PiecewisePoly needs one more breakpoint than pieces");
  for (std::size_t i = 1; i < breaks_.size(); ++i)
    if (!(breaks_[i - 1] < breaks_[i])) throw std::invalid_argument("PiecewisePoly breakpoints must increase");
}

PiecewisePoly PiecewisePoly::constant(const Rational& lo, const Rational& hi, const Rational& value) {
  return PiecewisePoly({lo, hi}, {Polynomial(value)});
}

Rational PiecewisePoly::operator()(const Rational& x) const {
  if (empty() || x < breaks_.front() || x > breaks_.back()) return Rational(0);
  auto it = std::lower_bound(breaks_.begin() + 1, breaks_.end(), x);
  auto i = static_cast<std::size_t>(it - breaks_.begin() - 1);
  return pieces_[i](x);
}

Rational PiecewisePoly::mass() const {
  Rational m(0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    Polynomial A = pieces_[i].antiderivative();
    m += A(breaks_[i + 1]) - A(breaks_[i]);
  }
  return m;
}

PiecewisePoly PiecewisePoly::merged() const {
  std::size_t lo = 0, hi = pieces_.size();
  while (lo < hi && pieces_[lo].is_zero()) ++lo;
  while (hi > lo && pieces_[hi - 1].is_zero()) --hi;
  if (lo == hi) return {};
  std::vector<Rational> b{breaks_[lo]};
  std::vector<Polynomial> p{pieces_[lo]};
  for (std::size_t i = lo + 1; i < hi; ++i) {
    if (pieces_[i] == p.back()) continue;
    b.push_back(breaks_[i]);
    p.push_back(pieces_[i]);
  }
  b.push_back(breaks_[hi]);
  return PiecewisePoly(std::move(b), std::move(p));
}

PiecewisePoly piecewise_pushforward(const PiecewisePoly& f, const Rational& theta, const Rational& a,
                                    const Rational& b) {
  if (a + b == 0) throw std::domain_error("pushforward needs a + b != 0");
  if (f.empty()) return {};
  const Rational scale = Rational(1) / (a + b);
  if (theta == 0) return PiecewisePoly::constant(Rational(0), b, f.mass() * scale);

  const auto& x = f.breakpoints();
  const std::size_t M = f.num_pieces();

  // Q_i(x_i) = 0, so Q_i(u) - Q_i(l) is the integral of piece i over [l, u].
  std::vector<Polynomial> Q(M);
  std::vector<Rational> prefix(M + 1);
  for (std::size_t i = 0; i < M; ++i) {
    Polynomial A = f.pieces()[i].antiderivative();
    Q[i] = A - Polynomial(A(x[i]));
    prefix[i + 1] = prefix[i] + Q[i](x[i + 1]);
  }

  // Window in x for a given y: theta x in [y - b, y + a].
  const Rational inv = Rational(1) / theta;
  const bool pos = theta > 0;
  const Rational lo_beta = pos ? Rational(-b * inv) : Rational(a * inv);
  const Rational hi_beta = pos ? Rational(a * inv) : Rational(-b * inv);

  std::vector<Rational> ys;
  ys.reserve(2 * x.size() + 1);
  ys.emplace_back(0);
  for (const auto& xi : x) {
    ys.emplace_back(theta * xi + b);
    ys.emplace_back(theta * xi - a);
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  ys.erase(ys.begin(), std::lower_bound(ys.begin(), ys.end(), Rational(0)));
  if (ys.size() < 2) return {};

  std::vector<Rational> out_b;
  std::vector<Polynomial> out_p;
  out_b.push_back(ys.front());
  for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
    const Rational mid = (ys[k] + ys[k + 1]) / 2;
    const Rational wl = mid * inv + lo_beta;
    const Rational wh = mid * inv + hi_beta;
    Polynomial g;
    if (wl < x.back() && wh > x.front()) {
      const bool low_linear = wl > x.front();
      const bool high_linear = wh < x.back();
      std::size_t il = 0, ih = M - 1;
      if (low_linear) il = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), wl) - x.begin()) - 1;
      if (high_linear) ih = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), wh) - x.begin()) - 1;

      auto upper = [&](std::size_t i) {
        return high_linear && i == ih ? Q[i].compose_linear(inv, hi_beta) : Polynomial(Q[i](x[i + 1]));
      };
      auto lower = [&](std::size_t i) {
        return low_linear && i == il ? Q[i].compose_linear(inv, lo_beta) : Polynomial();
      };
      if (il == ih) {
        g = upper(il) - lower(il);
      } else {
        g = upper(il) - lower(il) + upper(ih);
        if (ih > il + 1) g += Polynomial(prefix[ih] - prefix[il + 1]);
      }
      g *= scale;
    }
    out_b.push_back(ys[k + 1]);
    out_p.push_back(std::move(g));
  }
  return PiecewisePoly(std::move(out_b), std::move(out_p)).merged();
}

}  // namespace arpl
