#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bracerep {

// Runs one command line (without the program name). Returns the exit code:
// 0 all checks pass, 1 a mathematical failure (witness in the report),
// 2 a parse or usage error, 3 an analysis budget was exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bracerep
