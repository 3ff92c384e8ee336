#include "figure.hpp"

#include <stdexcept>
#include <string>

#include "arpl/mr_polynomials.hpp"
#include "arpl/persistence.hpp"

namespace arpl::cli {

FigureData figure_data(const FigureOptions& opt, Exec exec) {
  if (opt.step <= 0) throw std::invalid_argument("figure: grid step must be positive");
  if (opt.hi < opt.lo) throw std::invalid_argument("figure: empty theta range");
  for (int n : opt.ns)
    if (n < 1) throw std::invalid_argument("figure: n must be >= 1");

  FigureData d;
  d.ns = opt.ns;
  for (Rational t = opt.lo; t <= opt.hi; t += opt.step) d.theta.push_back(t);
  const auto m = static_cast<std::int64_t>(d.theta.size());
  d.p.assign(opt.ns.size(), std::vector<Rational>(d.theta.size()));

  auto cell = [&](std::int64_t i) {
    for (std::size_t j = 0; j < opt.ns.size(); ++j) {
      PersistenceQuery q;
      q.n = opt.ns[j];
      q.theta = d.theta[static_cast<std::size_t>(i)];
      d.p[j][static_cast<std::size_t>(i)] = persistence(q);
    }
  };
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < m; ++i) cell(i);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < m; ++i) cell(i);
  }

  d.dp.assign(opt.ns.size(), std::vector<double>(d.theta.size(), 0.0));
  if (d.theta.size() < 2) return d;
  for (std::size_t j = 0; j < opt.ns.size(); ++j) {
    const auto& p = d.p[j];
    const std::size_t last = p.size() - 1;
    for (std::size_t i = 0; i <= last; ++i) {
      const std::size_t l = i == 0 ? 0 : i - 1;
      const std::size_t r = i == last ? last : i + 1;
      d.dp[j][i] = to_double(Rational((p[r] - p[l]) / (d.theta[r] - d.theta[l])));
    }
  }
  return d;
}

Table figure_table(const FigureData& d) {
  Table t;
  t.name = "figure";
  t.columns.push_back("theta");
  for (int n : d.ns) {
    const auto s = std::to_string(n);
    t.columns.push_back("p" + s + "_exact");
    t.columns.push_back("p" + s);
    t.columns.push_back("dp" + s);
  }
  for (std::size_t i = 0; i < d.theta.size(); ++i) {
    std::vector<Json> row{to_double(d.theta[i])};
    for (std::size_t j = 0; j < d.ns.size(); ++j) {
      row.emplace_back(to_string(d.p[j][i]));
      row.emplace_back(to_double(d.p[j][i]));
      row.emplace_back(d.dp[j][i]);
    }
    t.add(std::move(row));
  }
  t.meta["derivative"] = "centered finite difference at grid resolution";
  return t;
}

Table figure_markers(const std::vector<int>& ns) {
  Table t;
  t.name = "figure_markers";
  t.columns = {"n", "kind", "theta", "left_dp", "right_dp", "left_d2p", "right_d2p"};
  for (int n : ns) {
    if (n >= 2) {
      const auto bd = boundary_derivatives(n);
      t.add({n, "theta_minus_one", -1.0, to_string(bd.left_p1), to_string(bd.right_p1), to_string(bd.left_p2),
             to_string(bd.right_p2)});
    }
    for (int k = 2; k <= n; ++k) {
      const double tk = fibonacci_boundary(k);
      t.add({n, "fibonacci_" + std::to_string(k), tk, nullptr, nullptr, nullptr, nullptr});
      if (tk != 1.0) t.add({n, "fibonacci_" + std::to_string(k) + "_inverse", 1.0 / tk, nullptr, nullptr, nullptr, nullptr});
    }
  }
  return t;
}

}  // namespace arpl::cli
