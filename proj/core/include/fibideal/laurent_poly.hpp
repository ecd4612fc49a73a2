#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fibideal/bigint.hpp"
#include "fibideal/ring.hpp"

namespace fibideal {

/// Laurent polynomial in one indeterminate q with BigInt coefficients.
///
/// Stored as a flat list of (exponent, coefficient) terms sorted by
/// exponent. Zero coefficients are never stored, so two polynomials are
/// equal exactly when their term lists are equal.
class LaurentPoly {
 public:
  struct Term {
    std::int64_t exp;
    BigInt coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(BigInt c);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  LaurentPoly(T c) : LaurentPoly(BigInt{c}) {}  // NOLINT(google-explicit-constructor)

  /// Terms may arrive in any order, with repeats and zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// coeffs[j] becomes the coefficient of q^(lowest_exp + j).
  static LaurentPoly from_coeffs(std::span<const BigInt> coeffs, std::int64_t lowest_exp = 0);
  static LaurentPoly from_coeffs(std::initializer_list<std::int64_t> coeffs, std::int64_t lowest_exp = 0);
  static LaurentPoly monomial(BigInt c, std::int64_t exp);
  /// The indeterminate q.
  static LaurentPoly q() { return monomial(BigInt{1}, 1); }

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(std::int64_t exp) const;
  /// Lowest/highest exponent with nonzero coefficient; nullopt for zero.
  std::optional<std::int64_t> min_exp() const;
  std::optional<std::int64_t> max_exp() const;
  /// No negative exponents.
  bool is_polynomial() const;
  /// Dense ascending coefficient list from q^0 to q^max_exp (polynomials only).
  std::vector<BigInt> dense_coeffs() const;

  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiply by q^k.
  LaurentPoly shifted(std::int64_t k) const;
  /// Formal derivative d/dq.
  LaurentPoly derivative() const;
  /// Units are +-q^k.
  std::optional<LaurentPoly> inverse() const;

  /// Exact evaluation at x. Negative exponents need x to be a unit of R;
  /// otherwise std::domain_error is thrown.
  template <CoefficientRing R>
  R eval(const R& x) const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

 private:
  std::vector<Term> terms_;
};

template <>
struct ring_traits<LaurentPoly> {
  static LaurentPoly zero() { return LaurentPoly{}; }
  static LaurentPoly one() { return LaurentPoly{1}; }
  static bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
  static std::optional<LaurentPoly> invert(const LaurentPoly& p) { return p.inverse(); }
};

template <CoefficientRing R>
R LaurentPoly::eval(const R& x) const {
  // Sparse Horner on each side of q^0, walking away from the origin.
  auto horner = [](auto first, auto last, const R& point, auto exponent_of) {
    R acc = ring_traits<R>::zero();
    std::int64_t prev = -1;
    for (auto it = first; it != last; ++it) {
      const std::int64_t e = exponent_of(*it);
      if (prev >= 0) acc = acc * ring_pow(point, static_cast<std::uint64_t>(prev - e));
      acc = acc + R(it->coeff);
      prev = e;
    }
    if (prev > 0) acc = acc * ring_pow(point, static_cast<std::uint64_t>(prev));
    return acc;
  };

  auto split = terms_.begin();
  while (split != terms_.end() && split->exp < 0) ++split;

  R result = horner(terms_.rbegin(), std::make_reverse_iterator(split), x,
                    [](const Term& t) { return t.exp; });
  if (split != terms_.begin()) {
    auto inv = ring_traits<R>::invert(x);
    if (!inv) throw std::domain_error("Laurent evaluation at a non-invertible point");
    result = result + horner(terms_.begin(), split, *inv, [](const Term& t) { return -t.exp; });
  }
  return result;
}

template <CoefficientRing R>
R laurent_eval(const LaurentPoly& p, const R& x) {
  return p.eval(x);
}

/// True iff coeff(k) == coeff(degree - k) for every integer k.
bool is_self_reciprocal(const LaurentPoly& p, std::int64_t degree);

/// Division with remainder of ordinary polynomials. The divisor's leading
/// coefficient must be +-1 so the quotient stays integral.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace fibideal
