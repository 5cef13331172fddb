#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zfsolve::cli {

/// Exit codes shared by all commands.
enum Exit : int { kOk = 0, kUsage = 1, kNoSolution = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zfsolve::cli
