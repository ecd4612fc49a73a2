#pragma once

#include <cstdint>
#include <vector>

#include "fibideal/bigint.hpp"

namespace fibideal {

/// Consecutive Fibonacci values (f_n, f_{n+1}).
struct FibPair {
  std::uint64_t index = 0;
  BigInt f_n{0};
  BigInt f_next{1};
};

/// (f_n, f_{n+1}) by fast doubling, f_0 = 0 and f_1 = 1.
FibPair fib_pair(std::uint64_t n);
BigInt fib(std::uint64_t n);
/// Fibonacci extended to negative indices through f_{n-2} = f_n - f_{n-1},
/// which gives f_{-n} = (-1)^{n+1} f_n.
BigInt fib_signed(std::int64_t n);
/// Lucas numbers, l_0 = 2 and l_1 = 1.
BigInt lucas(std::uint64_t n);

/// Positive divisors of n in ascending order; throws std::invalid_argument for n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);
/// Sum of the positive divisors of n; throws std::invalid_argument for n = 0.
BigInt sigma(std::uint64_t n);

/// Whether d lies in the half-open interval ((k + s)/2, k + s] with
/// s = sqrt(k^2 + 2n), decided by the equivalent integer tests
///   2d(d - k) > n   and   d(d - 2k) <= 2n.
bool in_short_interval(std::uint64_t n, std::uint64_t k, std::uint64_t d);

/// Counts a_{n,k} = #{ d | n : d in the short interval for k }, k = 0 .. n-1.
struct DivisorProfile {
  std::uint64_t n = 0;
  std::vector<BigInt> a;
};

DivisorProfile divisor_profile(std::uint64_t n);

}  // namespace fibideal
