#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qbounds::cli {

enum ExitCode : int { kOk = 0, kSelftestFailed = 1, kUsage = 2, kCapacity = 3 };

/// Runs the command line in args (args[0] is the program name) and returns
/// the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbounds::cli
