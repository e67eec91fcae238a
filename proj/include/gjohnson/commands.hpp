#ifndef GJOHNSON_COMMANDS_HPP_
#define GJOHNSON_COMMANDS_HPP_

#include <ostream>

namespace gjohnson {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBudget = 2,
  kExitVerification = 3,
};

/// Entry point of the `gjohnson` tool. Subcommands: info, aij, count, paths,
/// verify, sample, sweep, distribution.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gjohnson

#endif  // GJOHNSON_COMMANDS_HPP_
