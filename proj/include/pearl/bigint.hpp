#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace pearl {

// Exact arbitrary-precision integer; invariant values grow like d^{4g}.
using Int = boost::multiprecision::cpp_int;

inline Int int_pow(Int base, std::uint64_t exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// Binomial coefficient with C(n,k) = 0 whenever k < 0 or n < k.
inline Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace pearl
