#pragma once

#include <chrono>
#include <optional>

namespace xcl {

// Wall-clock cap for exact searches that can run long (the backtracking
// fallback above the subset-DP order limit). XCL_BUDGET_MS overrides the
// process default.
class SolverBudget {
 public:
  using Clock = std::chrono::steady_clock;

  static SolverBudget unlimited() { return SolverBudget(std::nullopt); }
  static SolverBudget milliseconds(long long ms) {
    return SolverBudget(std::chrono::milliseconds(ms));
  }
  // XCL_BUDGET_MS if set, else kDefaultMs. Read once per process.
  static const SolverBudget& process_default();

  static constexpr long long kDefaultMs = 10000;

  std::optional<std::chrono::milliseconds> limit() const { return limit_; }

 private:
  explicit SolverBudget(std::optional<std::chrono::milliseconds> limit)
      : limit_(limit) {}

  std::optional<std::chrono::milliseconds> limit_;
};

class Deadline {
 public:
  explicit Deadline(const SolverBudget& budget);

  // Throws Error(kBudgetExceeded) once the budget is spent. Cheap enough to
  // call every few thousand search nodes.
  void check(const char* what) const;

 private:
  std::optional<SolverBudget::Clock::time_point> at_;
};

}  // namespace xcl
