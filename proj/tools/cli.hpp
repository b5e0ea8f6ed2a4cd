#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shcalc::cli {

enum ExitCode : int { kSuccess = 0, kUnsupportedRegime = 2, kInvalidArguments = 3 };

/// Runs one invocation of the `shcalc` command line. `args` excludes the
/// program name. Results go to `out`, errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shcalc::cli
