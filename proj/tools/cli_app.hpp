#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lazyq::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kInvalidState = 1,
  kUsage = 2,
  kInconsistent = 3,
};

/// Runs the tool on `args` (without the program name), writing to the given
/// streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lazyq::cli
