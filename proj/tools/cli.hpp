#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kNotConverged = 3,
};

/// Runs the command line; args[0] is the program name. Results go to `out`,
/// diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
