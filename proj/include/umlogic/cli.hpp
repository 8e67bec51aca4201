#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umlogic::cli {

/// Exit codes shared by every command.
enum Exit : int { Affirmative = 0, Negative = 1, Error = 2 };

/// Runs one command line (args[0] is the program name). Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umlogic::cli
