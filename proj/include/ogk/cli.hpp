#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ogk {

/// Runs one CLI invocation; args exclude the program name. Exit codes:
/// 0 answer produced (including chi = "infinite"), 1 usage error,
/// 2 resource budget exhausted, 3 infeasible domain (bad parameters,
/// disconnected input, failed self-checks).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace ogk
