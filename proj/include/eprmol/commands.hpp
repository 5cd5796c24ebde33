#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eprmol {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitNumerical = 3,
};

/// Runs the command-line tool. `args` excludes the program name. Datasets go
/// to `--out` when given, otherwise to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace eprmol
