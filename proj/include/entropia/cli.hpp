#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entropia::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one command line (without the program name) and returns the exit
/// code: 0 ok, 1 verification violation, 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounds to 12 significant digits, the precision of every emitted float.
double round12(double x);

}  // namespace entropia::cli
