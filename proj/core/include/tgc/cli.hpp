#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tgc {

// Full command line driver, stream-parameterized so tests can capture output.
// Exit codes: 0 success, 2 bad input or infeasible request, 3 method
// disagreement, 4 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgc
