#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "fibideal/ring.hpp"

namespace fibideal {

/// Power series in t over R, truncated modulo t^(order+1).
///
/// Binary operations on series of different orders truncate to the smaller
/// order. Values are immutable once built; every operation returns a new
/// series.
template <CoefficientRing R>
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : c_(order + 1, ring_traits<R>::zero()) {}

  /// Pads with zeros or drops terms beyond t^order.
  TruncSeries(std::size_t order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1, ring_traits<R>::zero());
  }

  static TruncSeries one(std::size_t order) { return monomial(order, ring_traits<R>::one(), 0); }

  /// c * t^exp (zero if exp exceeds the order).
  static TruncSeries monomial(std::size_t order, const R& c, std::size_t exp) {
    TruncSeries s(order);
    if (exp <= order) s.c_[exp] = c;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const R& operator[](std::size_t i) const { return c_.at(i); }
  std::span<const R> coeffs() const { return c_; }

  TruncSeries truncated(std::size_t order) const {
    return TruncSeries(order, std::vector<R>(c_.begin(), c_.begin() + std::min(order, this->order()) + 1));
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  TruncSeries operator-() const {
    TruncSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
  }

  /// Cauchy product; zero coefficients of either side are skipped, so
  /// sparse factors such as 1 + F(t^m) cost O(N * N/m).
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<std::size_t> nz_b;
    for (std::size_t j = 0; j <= n; ++j) {
      if (!ring_traits<R>::is_zero(b.c_[j])) nz_b.push_back(j);
    }
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (ring_traits<R>::is_zero(a.c_[i])) continue;
      for (std::size_t j : nz_b) {
        if (i + j > n) break;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<R> c_;
};

template <CoefficientRing R>
TruncSeries<R> series_mul(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  return a * b;
}

/// Multiplicative inverse modulo t^(order+1). Throws std::domain_error when
/// the constant term is not a unit of R.
template <CoefficientRing R>
TruncSeries<R> series_inverse(const TruncSeries<R>& a) {
  auto inv0 = ring_traits<R>::invert(a[0]);
  if (!inv0) throw std::domain_error("series_inverse: constant term is not a unit");
  const std::size_t n = a.order();
  std::vector<std::size_t> nz;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!ring_traits<R>::is_zero(a[i])) nz.push_back(i);
  }
  // b_j = -a_0^{-1} * sum_{i>=1} a_i b_{j-i}
  std::vector<R> b(n + 1, ring_traits<R>::zero());
  b[0] = *inv0;
  for (std::size_t j = 1; j <= n; ++j) {
    R acc = ring_traits<R>::zero();
    for (std::size_t i : nz) {
      if (i > j) break;
      if (!ring_traits<R>::is_zero(b[j - i])) acc = acc + a[i] * b[j - i];
    }
    b[j] = -(*inv0 * acc);
  }
  return TruncSeries<R>(n, std::move(b));
}

/// a(t^m), keeping the order of a.
template <CoefficientRing R>
TruncSeries<R> substitute_power(const TruncSeries<R>& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("substitute_power: m must be positive");
  const std::size_t n = a.order();
  std::vector<R> out(n + 1, ring_traits<R>::zero());
  for (std::size_t i = 0; i * m <= n; ++i) out[i * m] = a[i];
  return TruncSeries<R>(n, std::move(out));
}

}  // namespace fibideal
