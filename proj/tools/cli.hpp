#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace enriques::cli {

enum ExitCode : int {
  kOk = 0,
  kBadFlags = 2,
  kInternal = 3,
  kInvalidForm = 4,
  kVerifyFailed = 5,
};

/// Runs the command line `args` (args[0] is the program name). Normal output goes
/// to `out`; errors are written to `err` as one JSON line each.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enriques::cli
