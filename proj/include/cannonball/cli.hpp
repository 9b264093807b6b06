#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cannonball::cli {

/// 0 success or pass, 1 negative verdict, 2 usage error, 3 internal failure.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cannonball::cli
