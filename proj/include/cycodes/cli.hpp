#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycodes {

/// Runs one command against the given streams and returns the process exit
/// code: 0 success, 1 infeasible construction or failed verification,
/// 2 usage or input error, 3 broken internal invariant.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycodes
