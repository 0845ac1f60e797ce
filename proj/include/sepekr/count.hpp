#pragma once

#include <cstdint>
#include <string>

namespace sepekr {

// Exact nonnegative counts (set-family sizes, weights, binomials).
// Every arithmetic step is overflow-checked and throws std::overflow_error.
using Count = unsigned __int128;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

// Binomial coefficient; zero when k < 0 or k > n (n >= 0).
Count binomial(std::int64_t n, std::int64_t k);

std::string to_string(Count value);

// Narrowing conversion; throws std::overflow_error if the value does not fit.
std::uint64_t to_u64(Count value);

}  // namespace sepekr
