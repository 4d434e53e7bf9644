#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halfstrip::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kNumerical = 3 };

// args excludes the program name. Reports go to `out` (or --output), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halfstrip::cli
