#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qpr {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInputError = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpr
