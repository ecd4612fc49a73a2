#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "fibideal/bigint.hpp"
#include "fibideal/laurent_poly.hpp"
#include "fibideal/quad_int.hpp"

namespace fibideal {

/// C_n(q): a polynomial of degree 2n with support in [0, 2n].
struct CnPolynomial {
  std::uint64_t n = 0;
  LaurentPoly poly;
};

/// q^{-n} C_n(q) = (q + 1/q - 2) (a_{n,0} + sum_{k=1}^{n-1} a_{n,k} (q^k + q^{-k})).
LaurentPoly cn_over_qn(std::uint64_t n);

/// C_n(q) = q^n * cn_over_qn(n). Throws std::invalid_argument for n = 0.
CnPolynomial cn_poly(std::uint64_t n);

enum class LambdaMethod { product, divisor, eval };

std::string_view to_string(LambdaMethod m);

struct LambdaResult {
  std::uint64_t n = 0;
  BigInt value;
  LambdaMethod method = LambdaMethod::divisor;
};

/// Thrown when an exact computation contradicts an identity that must hold,
/// e.g. C_n(alpha)/alpha^n with a nonzero phi-component.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// lambda_n = a_{n,0} + sum_{k=1}^{n-1} a_{n,k} l_{2k}.
LambdaResult lambda_divisor(std::uint64_t n);
/// lambda_1 .. lambda_max from the coefficients of prod_m (1 + F(t^m)).
std::vector<LambdaResult> lambda_product(std::uint64_t max_n);
/// lambda_n = C_n(alpha) * alpha^{-n}, computed in Z[phi].
LambdaResult lambda_eval(std::uint64_t n);

/// Both sides of C_n(alpha) = lambda_n (f_{2n} alpha - f_{2n-2}).
struct TheoremCheck {
  std::uint64_t n = 0;
  bool holds = false;
  QuadInt lhs;
  QuadInt rhs;
};

TheoremCheck verify_theorem(std::uint64_t n);

/// #{(x, y) in Z^2 : x^2 + b y^2 = n} by exhaustive search, b in {1, 2}.
BigInt lattice_count(std::uint64_t n, std::uint64_t b);

}  // namespace fibideal
