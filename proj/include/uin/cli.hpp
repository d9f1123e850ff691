#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uin {

// Whole command-line surface, separated from main() so tests can drive it
// in-process. Exit codes: 0 all statements hold, 1 a violation was found,
// 2 input/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uin
