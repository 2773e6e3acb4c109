#pragma once

#include <ostream>

namespace dseries::cli {

enum ExitCode { ok = 0, verify_failed = 1, usage_error = 2, domain_error = 3 };

/// Runs the dseries command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dseries::cli
