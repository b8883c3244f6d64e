#pragma once

#include <iosfwd>

namespace softint::cli {

/// Entry point shared by the executable and the tests. Returns the process
/// exit code: 2 for unusable input (parse errors with line and column), 1
/// when a checked verdict is violated, 0 otherwise.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace softint::cli
