#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xcl {

enum class ErrorCode {
  kOrderOverflow,
  kVertexOutOfRange,
  kNotAnEdge,
  kEmptyGraph,
  kParse,
  kInvalidParams,
  kUnsortedInput,
  kInvalidPath,
  kSeedDegreeTooHigh,
  kBudgetExceeded,
  kOrderTooLarge,
  kArithmeticOverflow,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; code() lets callers map
// categories onto exit statuses without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xcl
