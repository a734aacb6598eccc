#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace esa {

/// Exit codes of the `esa` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitNotEsa = 10,
    kExitGoldenMismatch = 20,
};

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace esa
