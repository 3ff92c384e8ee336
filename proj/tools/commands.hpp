#pragma once
// Command-line front end. `run` parses argv, dispatches one subcommand and
// returns the process exit status.

#include <ostream>
#include <string>
#include <vector>

namespace arpl::cli {

// Default output directory when --out is absent; unset means stdout.
inline constexpr const char* kOutDirEnv = "ARPL_OUT_DIR";
inline constexpr unsigned long long kDefaultSeed = 20240917ULL;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arpl::cli
