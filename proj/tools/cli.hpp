#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strdiag::cli {

enum Exit { kOk = 0, kUsage = 1, kNegative = 2, kInconclusive = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strdiag::cli
