#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccs {

/// Exit codes of the command-line driver.
enum ExitCode : int { kOk = 0, kUsage = 1, kInputError = 2, kSolverFailure = 3 };

/// Runs `ccsched <args...>` (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccs
