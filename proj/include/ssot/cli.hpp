#pragma once

#include <iosfwd>

namespace ssot {

/// Runs the command line front end. Returns 0 on success, 2 on usage errors
/// and 1 on domain errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ssot
