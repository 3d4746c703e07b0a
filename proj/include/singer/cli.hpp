#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace singer {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_verification = 2, exit_bounded = 3 };

/// args excludes the program name. JSON goes to out (or --out), the human log to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singer
