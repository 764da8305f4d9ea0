#pragma once

#include <iosfwd>

namespace cobk {

// Exit codes: 0 success, 1 semantic error, 2 parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cobk
