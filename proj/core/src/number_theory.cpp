#include "fibideal/number_theory.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fibideal {

FibPair fib_pair(std::uint64_t n) {
  // Fast doubling: f_{2k} = f_k (2 f_{k+1} - f_k), f_{2k+1} = f_k^2 + f_{k+1}^2.
  BigInt a{0};
  BigInt b{1};
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    BigInt two_k = a * (b + b - a);
    BigInt two_k1 = a * a + b * b;
    if ((n >> bit) & 1u) {
      a = two_k1;
      b = two_k + two_k1;
    } else {
      a = std::move(two_k);
      b = std::move(two_k1);
    }
  }
  return {n, std::move(a), std::move(b)};
}

BigInt fib(std::uint64_t n) { return fib_pair(n).f_n; }

BigInt fib_signed(std::int64_t n) {
  if (n >= 0) return fib(static_cast<std::uint64_t>(n));
  const std::uint64_t m = static_cast<std::uint64_t>(-(n + 1)) + 1u;
  BigInt v = fib(m);
  return (m % 2 == 0) ? -v : v;
}

BigInt lucas(std::uint64_t n) {
  // l_n = 2 f_{n+1} - f_n
  FibPair p = fib_pair(n);
  return p.f_next + p.f_next - p.f_n;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt sigma(std::uint64_t n) {
  BigInt total{0};
  for (std::uint64_t d : divisors(n)) total += BigInt{d};
  return total;
}

bool in_short_interval(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  if (n >= limit || k >= limit || d >= limit) throw std::out_of_range("in_short_interval: argument too large");
  __extension__ typedef __int128 wide;
  const wide wn = static_cast<wide>(n);
  const wide wk = static_cast<wide>(k);
  const wide wd = static_cast<wide>(d);
  return 2 * wd * (wd - wk) > wn && wd * (wd - 2 * wk) <= 2 * wn;
}

DivisorProfile divisor_profile(std::uint64_t n) {
  const auto divs = divisors(n);
  DivisorProfile profile{n, std::vector<BigInt>(n)};
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto count = std::count_if(divs.begin(), divs.end(),
                                     [&](std::uint64_t d) { return in_short_interval(n, k, d); });
    profile.a[k] = BigInt{count};
  }
  return profile;
}

}  // namespace fibideal
