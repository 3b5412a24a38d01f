#pragma once

#include <ostream>

namespace orbitmm {

/// Exit codes: 0 valid, 1 mathematically invalid, 2 usage or I/O error.
inline constexpr int kExitValid = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the orbitmm command (gen, verify, analyze, multiply, bench).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbitmm
