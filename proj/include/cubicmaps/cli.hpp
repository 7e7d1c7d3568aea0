#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubicmaps {

enum ExitStatus : int {
  kExitOk = 0,
  kExitFailure = 1,  // a verification check failed, or a runtime error
  kExitUsage = 2,
};

/// Entry point of the `cubicmaps` tool. `args` excludes the program name.
/// Data goes to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubicmaps
