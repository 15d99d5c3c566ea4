#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgprod {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitComputation = 1, kExitInput = 2 };

/// Runs one command. `args` excludes the program name. Documents named "-"
/// are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace sgprod
