#pragma once
// Grid data for the p_n(theta), theta in [-5, 5] plots.

#include <vector>

#include "arpl/montecarlo.hpp"  // Exec
#include "arpl/rational.hpp"
#include "table.hpp"

namespace arpl::cli {

struct FigureOptions {
  std::vector<int> ns{4, 5};
  Rational lo{-5}, hi{5};
  Rational step{1, 100};
};

struct FigureData {
  std::vector<int> ns;
  std::vector<Rational> theta;
  std::vector<std::vector<Rational>> p;  // p[j][i] = p_{ns[j]}(theta[i]), exact
  std::vector<std::vector<double>> dp;   // centered differences, one-sided at the ends
};

FigureData figure_data(const FigureOptions& opt, Exec exec = Exec::Parallel);

// columns: theta, then p<n>_exact, p<n>, dp<n> for each n
Table figure_table(const FigureData& data);

// theta = -1 with exact one-sided derivatives, plus the breakpoints theta_k
// (theta + ... + theta^{k-1} = 1) and 1/theta_k for 2 <= k <= n.
Table figure_markers(const std::vector<int>& ns);

}  // namespace arpl::cli
