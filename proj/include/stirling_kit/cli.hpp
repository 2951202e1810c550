#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stirling_kit {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs the `stirling-kit` command line.  args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirling_kit
