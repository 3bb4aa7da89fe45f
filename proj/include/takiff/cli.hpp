#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace takiff_lab {

/// Exit codes of run().
enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

/// Runs one takiff-lab command. `args` excludes the program name. Everything
/// meant for the user goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace takiff_lab
