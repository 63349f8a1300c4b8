#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perfcode::cli {

// Exit codes of every subcommand.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;     // property fails; witness on stdout
inline constexpr int kUsage = 2;     // usage, parse or precondition error on stderr
inline constexpr int kInternal = 3;  // an internal consistency check tripped

// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perfcode::cli
