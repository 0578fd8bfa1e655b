#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotfib::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,  // ran, but a check did not hold (verify-cert, corpus-run)
  exit_parse = 2,
  exit_out_of_scope = 3,
  exit_internal = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotfib::cli
