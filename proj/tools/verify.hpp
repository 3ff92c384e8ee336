#pragma once
// Exact identity suite behind `arpl verify`.

#include <ostream>
#include <string>
#include <vector>

namespace arpl::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // what was checked, or the failure message
  double seconds = 0;
};

// Runs every check with horizon nmax (>= 2). Each result is logged to `log`
// as it finishes when log is non-null. Stops at the first failure when
// stop_on_failure is set.
std::vector<CheckResult> run_verify(int nmax, std::ostream* log = nullptr, bool stop_on_failure = false);

}  // namespace arpl::cli
