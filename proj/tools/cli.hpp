#pragma once

#include <iosfwd>
#include <string_view>

#include "xcl/error.hpp"

namespace xcl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

inline constexpr int kSchemaVersion = 1;

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// "5..8" or a single integer.
IntRange parse_range(std::string_view text);

int exit_code_for(ErrorCode code);

// argv[0] is the program name. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xcl::cli
