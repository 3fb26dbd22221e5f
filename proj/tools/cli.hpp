#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mstep::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kMismatch = 3,
};

/// Runs one command line. args[0] is the program name. Everything the
/// command prints goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mstep::cli
