#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harm {

/// Runs the command-line front end on `args` (the program name excluded).
/// Reports go to `out`; diagnostics go to `err`, never to `out`.
///
/// Exit status: 0 success, 1 usage error, 2 validation failure,
/// 3 unreachable target, 4 path cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harm
