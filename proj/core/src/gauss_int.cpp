#include "fibideal/gauss_int.hpp"

#include <ostream>

namespace fibideal {

std::optional<GaussInt> GaussInt::inverse() const {
  // Units are exactly the elements of norm 1: +-1, +-i.
  if (norm() != BigInt{1}) return std::nullopt;
  return conj();
}

std::string GaussInt::to_string() const {
  std::string s = re_.to_string();
  if (im_.sign() < 0) {
    s += "-" + im_.abs().to_string() + "*i";
  } else {
    s += "+" + im_.to_string() + "*i";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const GaussInt& x) { return os << x.to_string(); }

}  // namespace fibideal
