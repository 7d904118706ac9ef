#pragma once

#include <ostream>

namespace titeica::cli {

// Exit codes: 0 all checks passed, 1 a check failed or the point/grid left
// the domain, 2 bad flags, config or I/O.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace titeica::cli
