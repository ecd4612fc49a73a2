#pragma once

// Coefficient-ring contract shared by the exact value types and the
// truncated series engine.
//
// A type R takes part by specializing ring_traits<R> with
//   static R zero();
//   static R one();
//   static bool is_zero(const R&);
//   static std::optional<R> invert(const R&);   // nullopt for non-units
// and by providing the usual value operators (+, -, *, unary -, ==).

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace fibideal {

template <class R>
struct ring_traits;

template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& a, const R& b) {
  { a + b } -> std::same_as<R>;
  { a - b } -> std::same_as<R>;
  { a * b } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
  { ring_traits<R>::zero() } -> std::same_as<R>;
  { ring_traits<R>::one() } -> std::same_as<R>;
  { ring_traits<R>::is_zero(a) } -> std::same_as<bool>;
  { ring_traits<R>::invert(a) } -> std::same_as<std::optional<R>>;
};

template <CoefficientRing R>
R ring_pow(R base, std::uint64_t exp) {
  R result = ring_traits<R>::one();
  while (exp != 0) {
    if (exp & 1u) result = result * base;
    exp >>= 1;
    if (exp != 0) base = base * base;
  }
  return result;
}

// Signed power; negative exponents require a unit base.
template <CoefficientRing R>
R ring_pow_signed(const R& base, std::int64_t exp) {
  if (exp >= 0) return ring_pow(base, static_cast<std::uint64_t>(exp));
  auto inv = ring_traits<R>::invert(base);
  if (!inv) throw std::domain_error("negative power of a non-invertible element");
  return ring_pow(*inv, static_cast<std::uint64_t>(-(exp + 1)) + 1u);
}

}  // namespace fibideal
