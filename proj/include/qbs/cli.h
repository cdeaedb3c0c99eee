#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbs {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitFound = 0,
    kExitNotFound = 1,
    kExitInconsistent = 2,
    kExitUsage = 64,
};

/// Entry point behind the `qbs` executable. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbs
