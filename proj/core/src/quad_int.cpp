#include "fibideal/quad_int.hpp"

#include <ostream>

namespace fibideal {

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  // (a + b phi)(c + d phi) = ac + (ad + bc) phi + bd phi^2, with phi^2 = phi + 1.
  const BigInt bd = x.b_ * y.b_;
  return {x.a_ * y.a_ + bd, x.a_ * y.b_ + x.b_ * y.a_ + bd};
}

BigInt QuadInt::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

std::optional<QuadInt> QuadInt::inverse() const {
  const BigInt n = norm();
  if (n == BigInt{1}) return conj();
  if (n == BigInt{-1}) return -conj();
  return std::nullopt;
}

QuadInt alpha_pow(std::int64_t n) { return ring_pow_signed(QuadInt::alpha(), n); }

std::string QuadInt::to_string() const {
  std::string s = a_.to_string();
  if (b_.sign() < 0) {
    s += "-" + b_.abs().to_string() + "*phi";
  } else {
    s += "+" + b_.to_string() + "*phi";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << x.to_string(); }

}  // namespace fibideal
