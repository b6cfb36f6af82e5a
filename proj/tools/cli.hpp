#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlfrac::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one subcommand. `args` excludes the program name. Tables and reports
/// go to `out`, one-line `ERROR <code>: <message>` diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlfrac::cli
