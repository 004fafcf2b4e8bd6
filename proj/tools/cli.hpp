#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symtensor::cli {

/// Runs one command line (args[0] is the program name). Returns the exit
/// code: 0 success, 1 failed verification or degenerate pencil, 2 bad flags
/// or invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symtensor::cli
