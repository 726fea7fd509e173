#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mforge::cli {

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

/// Runs one mforge invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace mforge::cli
