#include "fibideal/bigint.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace fibideal {

BigInt BigInt::from_string(std::string_view decimal) {
  std::string_view digits = decimal;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("invalid integer literal: " + std::string(decimal));
  }
  mpz_class v;
  // mpz_set_str rejects a leading '+'.
  std::string text(decimal.front() == '+' ? decimal.substr(1) : decimal);
  if (v.set_str(text, 10) != 0) throw std::invalid_argument("invalid integer literal: " + text);
  return BigInt{std::move(v)};
}

BigInt& BigInt::operator+=(const BigInt& o) {
  mpz_add(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  mpz_sub(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  mpz_mul(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

BigInt& BigInt::addmul(const BigInt& a, const BigInt& b) {
  mpz_addmul(v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return *this;
}

BigInt BigInt::operator-() const {
  BigInt r;
  mpz_neg(r.v_.get_mpz_t(), v_.get_mpz_t());
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  const int c = cmp(a.v_, b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt BigInt::abs() const {
  BigInt r;
  mpz_abs(r.v_.get_mpz_t(), v_.get_mpz_t());
  return r;
}

BigInt BigInt::pow(std::uint64_t exp) const {
  if (exp > std::numeric_limits<unsigned long>::max()) throw std::overflow_error("exponent too large");
  BigInt r;
  mpz_pow_ui(r.v_.get_mpz_t(), v_.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

std::optional<std::int64_t> BigInt::to_int64() const {
  if (!v_.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v_.get_si());
}

std::size_t BigInt::decimal_digits() const {
  if (is_zero()) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::string s = abs().v_.get_str(10);
  return s.size();
}

std::string BigInt::to_string() const { return v_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.to_string(); }

}  // namespace fibideal
