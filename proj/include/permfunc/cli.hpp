#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permfunc::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kParseError = 2,
  kDomainError = 3,
  kCheckFailed = 4,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace permfunc::cli
