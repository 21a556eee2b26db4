#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbmod {

/// Runs the command line tool on `args` (without the program name).
/// Exit codes: 0 success or "yes", 1 a negative answer (invalid module,
/// not isomorphic, degenerate column), 2 usage, parse or file errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbmod
