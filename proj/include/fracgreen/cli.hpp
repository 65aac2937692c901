#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracgreen {

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 1 failed verification, 2 domain or usage
/// error, 3 accuracy failure, 4 wave case.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracgreen
