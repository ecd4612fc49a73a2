#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "fibideal/bigint.hpp"
#include "fibideal/ring.hpp"

namespace fibideal {

/// Element a + b*phi of Z[phi], where phi is the golden ratio (phi^2 = phi + 1).
///
/// The point (3+sqrt 5)/2 lives here as alpha = 1 + phi, a unit of norm 1
/// with inverse 2 - phi.
class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(BigInt a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  QuadInt(T a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadInt phi() { return {BigInt{0}, BigInt{1}}; }
  static QuadInt alpha() { return {BigInt{1}, BigInt{1}}; }
  static QuadInt alpha_inverse() { return {BigInt{2}, BigInt{-1}}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  QuadInt operator-() const { return {-a_, -b_}; }
  friend bool operator==(const QuadInt&, const QuadInt&) = default;

  /// Galois conjugate, phi -> 1 - phi.
  QuadInt conj() const { return {a_ + b_, -b_}; }
  /// a^2 + ab - b^2, the product with the conjugate.
  BigInt norm() const;

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// True when the phi-component vanishes.
  bool is_rational() const { return b_.is_zero(); }
  std::optional<QuadInt> inverse() const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadInt& x);

 private:
  BigInt a_;
  BigInt b_;
};

inline BigInt quad_norm(const QuadInt& x) { return x.norm(); }
inline QuadInt quad_mul(const QuadInt& x, const QuadInt& y) { return x * y; }

/// alpha^n for any signed n, by binary powering of alpha or its inverse.
QuadInt alpha_pow(std::int64_t n);

template <>
struct ring_traits<QuadInt> {
  static QuadInt zero() { return QuadInt{}; }
  static QuadInt one() { return QuadInt{1}; }
  static bool is_zero(const QuadInt& x) { return x.is_zero(); }
  static std::optional<QuadInt> invert(const QuadInt& x) { return x.inverse(); }
};

}  // namespace fibideal
