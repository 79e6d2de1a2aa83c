#pragma once

#include <ostream>

namespace dfilab::cli {

/// Runs the built-in worked examples; one line per check. Returns the
/// number of failures.
int run_selftest(std::ostream& out);

}  // namespace dfilab::cli
