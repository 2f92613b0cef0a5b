#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signlap::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNegative = 3,        // definitive "no": no certificate, not bipartite, ...
  kBudgetExceeded = 4,
};

/// Runs one subcommand; payload goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace signlap::cli
