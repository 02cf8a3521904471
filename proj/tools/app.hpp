#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mollow::cli {

/// Runs the command line (args[0] is the program name). Returns the exit code:
/// 0 ok, 2 configuration error, 3 numerical failure, 1 anything else.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mollow::cli
