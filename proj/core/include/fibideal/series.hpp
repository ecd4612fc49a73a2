#pragma once

#include <cstddef>
#include <stdexcept>

#include "fibideal/bigint.hpp"
#include "fibideal/trunc_series.hpp"

namespace fibideal {

/// F(t) = sum_{n>=1} f_{2n} t^n, via c_n = 3 c_{n-1} - c_{n-2}.
TruncSeries<BigInt> f_series(std::size_t order);

/// prod_{m=1}^{order} (1 + F(t^m)); factors with m > order are 1 modulo
/// t^(order+1), so the finite product is exact.
TruncSeries<BigInt> lambda_product_series(std::size_t order);

/// 1 - s t^m + t^(2m)
template <CoefficientRing R>
TruncSeries<R> kr_denominator(std::size_t order, std::size_t m, const R& s) {
  using T = ring_traits<R>;
  return TruncSeries<R>::one(order) - TruncSeries<R>::monomial(order, s, m) +
         TruncSeries<R>::monomial(order, T::one(), 2 * m);
}

/// (1 - t^m)^2 / (1 - s t^m + t^(2m))
template <CoefficientRing R>
TruncSeries<R> kr_factor(std::size_t order, std::size_t m, const R& s) {
  using T = ring_traits<R>;
  const auto two = T::one() + T::one();
  const auto numerator = TruncSeries<R>::one(order) - TruncSeries<R>::monomial(order, two, m) +
                         TruncSeries<R>::monomial(order, T::one(), 2 * m);
  return numerator * series_inverse(kr_denominator(order, m, s));
}

/// 1 + (s - 2) t^m / (1 - s t^m + t^(2m)), the same factor written as a
/// perturbation of 1.
template <CoefficientRing R>
TruncSeries<R> kr_factor_split(std::size_t order, std::size_t m, const R& s) {
  using T = ring_traits<R>;
  const auto two = T::one() + T::one();
  return TruncSeries<R>::one(order) +
         TruncSeries<R>::monomial(order, s - two, m) * series_inverse(kr_denominator(order, m, s));
}

/// prod_{m>=1} (1 - t^m)^2 / (1 - (q + 1/q) t^m + t^(2m)) with q := qval.
///
/// qval is either the indeterminate q of LaurentPoly or a unit of R such as
/// alpha in Z[phi]. Throws std::domain_error if qval is not invertible.
template <CoefficientRing R>
TruncSeries<R> kr_lhs_series(std::size_t order, const R& qval) {
  auto inv = ring_traits<R>::invert(qval);
  if (!inv) throw std::domain_error("kr_lhs_series: q must be invertible");
  const R s = qval + *inv;
  auto acc = TruncSeries<R>::one(order);
  for (std::size_t m = 1; m <= order; ++m) acc = acc * kr_factor(order, m, s);
  return acc;
}

}  // namespace fibideal
