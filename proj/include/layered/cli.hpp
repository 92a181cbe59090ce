#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace layered {

/// Runs the command line `args` (without the program name). Returns the
/// process exit status: 0 on success, non-zero on any error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace layered
