#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lstat::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_data = 3;
inline constexpr int exit_capacity = 4;

/// Runs the command line `args` (args[0] is the program name). Diagnostics go
/// to `err`; CSV written to "-" goes to `out`. Returns the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lstat::cli
