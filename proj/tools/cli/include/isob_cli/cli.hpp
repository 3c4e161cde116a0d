#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "isob/errors.hpp"

namespace isob::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDomainError = 3,
  kInconclusive = 10,
};

/// Usage for malformed input, a verification failure for an internal
/// consistency fault, a domain error for everything else.
int exit_code_for(ErrorKind kind);

/// Runs the `isob` command line. `args` excludes the program name. Reads the
/// ISOB_* environment variables for options not given as flags.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isob::cli
