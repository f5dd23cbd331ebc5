#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inertia_lab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2, kBudgetError = 3 };

// Runs the command line `args` (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inertia_lab::cli
