#include "sepekr/count.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sepekr {

Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("count addition overflows 128 bits");
  }
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("count multiplication overflows 128 bits");
  }
  return out;
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i; reduce first to keep intermediates small.
    Count num = static_cast<Count>(n - k + i);
    Count den = static_cast<Count>(i);
    Count g = std::gcd(result, den);
    result /= g;
    den /= g;
    num /= den;  // den divides num after removing gcd(result, i)
    result = checked_mul(result, num);
  }
  return result;
}

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::uint64_t to_u64(Count value) {
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("count does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace sepekr
