#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldmac::cli {

/// Exit codes besides 0.
enum ExitCode : int {
  kInternalError = 1,
  kUsageError = 2,
  kGuardRefused = 3,
  kDegenerate = 4,
};

/// Runs one command; `args` excludes the program name. Results go to `out`,
/// errors are written to `out` as JSON and summarized on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldmac::cli
