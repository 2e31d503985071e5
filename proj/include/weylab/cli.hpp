#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weylab {

// Dispatches one command line (without argv[0]). Exit codes: 0 success/true,
// 1 false/negative result, 2 usage error, 3 internal inconsistency.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylab
