#pragma once

// The gmac command line as a library call so tests can drive it in-process.
// Exit codes: 0 success, 1 bad input or usage, 2 a check failed.

#include <ostream>
#include <string>
#include <vector>

namespace gmac {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmac
