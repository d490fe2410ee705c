#pragma once

#include <iosfwd>

namespace entsep::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kEntangled = 3,
  kNumericalFailure = 4,
};

// Entry point of the `entsep` tool. Reports go to `out` (or --out), the run
// header and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace entsep::cli
