#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boxdim {

/// Runs one CLI invocation (args exclude the program name) and writes the
/// report to `out` (or the --out file) and diagnostics to `err`.
/// Exit codes: 0 success/passed, 1 verification failed, 2 input error,
/// 3 validity-window error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxdim
