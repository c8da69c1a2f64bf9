#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betent {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,  // unreadable input or bad command line
  kExitDegenerate = 3,
  kExitUnknownVertex = 4,
  kExitVerifyMismatch = 5,
};

/// Runs the CLI. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betent
