#pragma once

#include <ostream>

namespace prefixlab::cli {

// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResourceCeiling = 3,
  kInputInvalid = 4,
  kPreconditionUnmet = 5,
};

// Entry point of the prefixlab tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prefixlab::cli
