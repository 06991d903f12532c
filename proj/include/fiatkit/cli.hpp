#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fiatkit::cli {

/// Exit codes: 0 pass or info, 1 a check failed, 2 bad input or usage.
enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2 };

/// Runs one subcommand. The JSON report {"command", "status", "payload"} goes
/// to `out`; usage text and timing go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fiatkit::cli
