#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace champagne::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,       // a check failed or a configuration is invalid
  kBadInput = 2,     // usage error, unreadable or malformed input
  kCapExceeded = 3,  // search survivor cap
};

/// Runs one command line (without the program name). Reports go to `out`,
/// progress and diagnostics to `err`; `in` backs the "-" input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace champagne::cli
