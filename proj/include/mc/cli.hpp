#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mc {

enum ExitStatus : int {
    kExitOk = 0,
    kExitDataFailure = 1,
    kExitInputError = 2,
    kExitInternalDefect = 3,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mc
