#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fibideal/ring.hpp"

namespace fibideal {

/// Arbitrary-precision signed integer backed by GMP.
///
/// A thin value wrapper over mpz_class so that arithmetic always yields a
/// BigInt (no expression templates leak into generic code).
class BigInt {
 public:
  BigInt() = default;

  template <std::signed_integral T>
  BigInt(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  BigInt(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed base-10 literal; throws std::invalid_argument.
  static BigInt from_string(std::string_view decimal);

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  /// *this += a * b
  BigInt& addmul(const BigInt& a, const BigInt& b);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  BigInt operator-() const;

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  BigInt abs() const;
  BigInt pow(std::uint64_t exp) const;

  /// Value as int64 when representable.
  std::optional<std::int64_t> to_int64() const;
  std::size_t decimal_digits() const;
  std::string to_string() const;

  const mpz_class& mpz() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& x);

 private:
  mpz_class v_;
};

template <>
struct ring_traits<BigInt> {
  static BigInt zero() { return BigInt{}; }
  static BigInt one() { return BigInt{1}; }
  static bool is_zero(const BigInt& x) { return x.is_zero(); }
  static std::optional<BigInt> invert(const BigInt& x) {
    if (x == BigInt{1} || x == BigInt{-1}) return x;
    return std::nullopt;
  }
};

}  // namespace fibideal
