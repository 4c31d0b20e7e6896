#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crnet::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kRegression = 2 };

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crnet::cli
