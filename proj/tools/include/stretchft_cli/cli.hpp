#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stretchft::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitFailure = 3,
  kExitInconclusive = 4,
  kExitViolation = 5,
};

/// Runs the command line (without the program name). Records go to out, or to
/// the --out file; diagnostics and --timing go to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stretchft::cli
