#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "exh/polytope.hpp"

namespace exh::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kResourceCap = 3,
};

/// Runs the command line `argv` writing to `out` / `err`; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "1, 0,-2.5" -> {1, 0, -2.5}. Whitespace is ignored. Throws InvalidInput.
Vector parse_direction(std::string_view text);

/// Shortest decimal that round-trips to `x`; -0 prints as 0.
std::string format_number(double x);

}  // namespace exh::cli
