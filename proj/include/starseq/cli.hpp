#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starseq {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitInputError = 2,
};

/// Runs the command line `args` (args[0] is the program name), writing
/// records to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace starseq
