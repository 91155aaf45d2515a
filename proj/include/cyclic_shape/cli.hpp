#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclic_shape {

/// Runs the command line `args` (without the program name) and returns the
/// process exit code: 0 success, 1 invariant failure, 2 validation failure,
/// 3 parse failure. Errors are written to `err` as one JSON object.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclic_shape
