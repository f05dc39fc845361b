#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sfdc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kInternalError = 3,
};

// Runs one command line (without the program name). Exit code 1 is reserved
// for mathematical verification failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The subcommand grammar printed on usage errors.
std::string grammar();

}  // namespace sfdc::cli
