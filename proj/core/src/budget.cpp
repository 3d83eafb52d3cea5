#include "xcl/budget.hpp"

#include <cstdlib>
#include <string>

#include "xcl/error.hpp"

namespace xcl {

const SolverBudget& SolverBudget::process_default() {
  static const SolverBudget budget = [] {
    if (const char* env = std::getenv("XCL_BUDGET_MS")) {
      char* end = nullptr;
      const long long ms = std::strtoll(env, &end, 10);
      if (end != env && *end == '\0' && ms > 0) return milliseconds(ms);
    }
    return milliseconds(kDefaultMs);
  }();
  return budget;
}

Deadline::Deadline(const SolverBudget& budget) {
  if (budget.limit()) at_ = SolverBudget::Clock::now() + *budget.limit();
}

void Deadline::check(const char* what) const {
  if (at_ && SolverBudget::Clock::now() > *at_) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(what) + ": exceeds exact-solver budget");
  }
}

}  // namespace xcl
