#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logder {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  /// A verification answered "no" (or the experiment found disagreements).
  kExitNegative = 1,
  /// Bad arguments or unreadable/malformed input.
  kExitUsage = 2,
};

/// Runs one command; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logder
