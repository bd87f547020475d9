#pragma once

#include <ostream>

namespace modasc {

/// Entry point of the command-line tool. Exit codes: 0 success, 1 a check
/// or comparison failed, 2 bad input or cap exceeded, other values come
/// from argument parsing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modasc
