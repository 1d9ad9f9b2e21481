#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tribwords {

/// Exit codes of run_cli.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitInvalidInput = 3 };

/// Entry point of the tribwords command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tribwords
