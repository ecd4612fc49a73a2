#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fibideal/bigint.hpp"
#include "fibideal/ring.hpp"

namespace fibideal {

/// Gaussian integer re + im*i.
class GaussInt {
 public:
  GaussInt() = default;
  GaussInt(BigInt re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  GaussInt(T re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussInt i() { return {BigInt{0}, BigInt{1}}; }

  const BigInt& re() const { return re_; }
  const BigInt& im() const { return im_; }

  friend GaussInt operator+(const GaussInt& x, const GaussInt& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
  friend GaussInt operator-(const GaussInt& x, const GaussInt& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
  friend GaussInt operator*(const GaussInt& x, const GaussInt& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  GaussInt operator-() const { return {-re_, -im_}; }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;

  GaussInt conj() const { return {re_, -im_}; }
  BigInt norm() const { return re_ * re_ + im_ * im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::optional<GaussInt> inverse() const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const GaussInt& x);

 private:
  BigInt re_;
  BigInt im_;
};

template <>
struct ring_traits<GaussInt> {
  static GaussInt zero() { return GaussInt{}; }
  static GaussInt one() { return GaussInt{1}; }
  static bool is_zero(const GaussInt& x) { return x.is_zero(); }
  static std::optional<GaussInt> invert(const GaussInt& x) { return x.inverse(); }
};

}  // namespace fibideal
