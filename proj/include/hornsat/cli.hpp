#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hornsat {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitUsage = 2,
  kExitSat = 10,
  kExitUnsat = 20,
};

/// Entry point of the `hornsat` tool. `args` includes the program name.
/// Input named "-" is read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace hornsat
