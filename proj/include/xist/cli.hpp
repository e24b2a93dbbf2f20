#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xist::cli {

/// Exit codes of the xistcut tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDataError = 1,
  kExitUsage = 2,
  kExitDegenerateVloc = 3,
};

/// Runs one xistcut invocation. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run(int argc, char **argv);

}  // namespace xist::cli
