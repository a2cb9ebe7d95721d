#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dqr {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitParameter = 4;
inline constexpr int kExitDifferential = 5;

/// Runs the dqr command line. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace dqr
