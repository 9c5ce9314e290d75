#pragma once

// The pskew command line: argument parsing, command dispatch and reports.

#include <iosfwd>
#include <string>
#include <vector>

namespace pskew::cli {

enum ExitCode : int { agree = 0, disagree = 1, invalid_input = 2 };

/// Runs the command line given by args (args[0] is the program name) and
/// returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pskew::cli
