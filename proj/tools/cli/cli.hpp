#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace maxplus::cli {

/// Runs one invocation of the `maxplus` tool. `args` excludes the program
/// name. Reports go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on a validation error, 2 on an assumption violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxplus::cli
