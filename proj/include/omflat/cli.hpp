#pragma once

#include <iosfwd>

namespace omflat {

/// Runs the omflat command line. Returns 0 iff every verdict passes, 1 when a check fails
/// or times out, and 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace omflat
