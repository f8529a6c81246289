#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shgtool {

/// Parses the arguments (without the program name), runs the subcommand and
/// returns its exit code. Usage errors print to err and return 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shgtool
