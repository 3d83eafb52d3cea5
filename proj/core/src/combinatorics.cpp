#include "xcl/combinatorics.hpp"

#include <limits>

namespace xcl {

namespace {

__extension__ using Wide = unsigned __int128;

[[noreturn]] void overflow(const char* op) {
  throw Error(ErrorCode::kArithmeticOverflow,
              std::string("64-bit overflow in ") + op);
}

}  // namespace

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) overflow("addition");
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) overflow("multiplication");
  return out;
}

Count binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // r * (n - i) is divisible by (i + 1) at every step; the 128-bit
  // intermediate keeps that product exact.
  Wide r = 1;
  for (long long i = 0; i < k; ++i) {
    r = r * static_cast<Wide>(n - i) /
        static_cast<Wide>(i + 1);
    if (r > std::numeric_limits<Count>::max()) overflow("binomial");
  }
  return static_cast<Count>(r);
}

}  // namespace xcl
