#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lorentzvol::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
};

/// Runs the tool on `args` (args[0] is the program name); records go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorentzvol::cli
