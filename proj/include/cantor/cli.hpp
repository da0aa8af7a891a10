#pragma once

#include <iosfwd>

namespace cantor {

/// Runs the command-line front-end. Output destined for stdout/stderr is
/// written to the given streams so tests can drive commands in-process.
/// Exit codes: 0 success, 1 verification failure, 2 invalid input,
/// 3 budget exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace cantor
