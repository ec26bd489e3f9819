#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace becnlo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNonConvergence = 3;

// Runs one subcommand. `args` excludes the program name. Human-readable
// results go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace becnlo::cli
