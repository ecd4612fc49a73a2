#include "fibideal/series.hpp"

#include <vector>

namespace fibideal {

TruncSeries<BigInt> f_series(std::size_t order) {
  std::vector<BigInt> c(order + 1);
  if (order >= 1) c[1] = BigInt{1};
  for (std::size_t n = 2; n <= order; ++n) c[n] = BigInt{3} * c[n - 1] - c[n - 2];
  return TruncSeries<BigInt>(order, std::move(c));
}

TruncSeries<BigInt> lambda_product_series(std::size_t order) {
  const auto one = TruncSeries<BigInt>::one(order);
  const auto f = f_series(order);
  auto acc = one;
  for (std::size_t m = 1; m <= order; ++m) acc = acc * (one + substitute_power(f, m));
  return acc;
}

}  // namespace fibideal
