#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rainbow {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  // bad arguments or unparseable input
  kExitPrecondition = 2,
  kExitCounterexample = 3,
};

/// Entry point of the `rainbow` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow
