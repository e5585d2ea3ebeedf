#ifndef ONEUNIT_TOOLS_CLI_HPP
#define ONEUNIT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace oneunit::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage error.
enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (argv without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oneunit::cli

#endif  // ONEUNIT_TOOLS_CLI_HPP
