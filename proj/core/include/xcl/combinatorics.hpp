#pragma once

#include "xcl/invariants.hpp"

namespace xcl {

// Exact binomial coefficient; zero when k < 0, k > n or n < 0.
// Throws Error(kArithmeticOverflow) if the value does not fit in Count.
Count binomial(long long n, long long k);

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

}  // namespace xcl
