#include "fibideal/kr.hpp"

#include "fibideal/number_theory.hpp"
#include "fibideal/series.hpp"

namespace fibideal {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

std::int64_t as_exp(std::uint64_t k) { return static_cast<std::int64_t>(k); }

}  // namespace

LaurentPoly cn_over_qn(std::uint64_t n) {
  require_positive(n, "cn_over_qn");
  const DivisorProfile profile = divisor_profile(n);
  std::vector<LaurentPoly::Term> terms{{0, profile.a[0]}};
  for (std::uint64_t k = 1; k < n; ++k) {
    if (profile.a[k].is_zero()) continue;
    terms.push_back({as_exp(k), profile.a[k]});
    terms.push_back({-as_exp(k), profile.a[k]});
  }
  const LaurentPoly shift = LaurentPoly::from_coeffs({1, -2, 1}, -1);  // q + 1/q - 2
  return shift * LaurentPoly::from_terms(std::move(terms));
}

CnPolynomial cn_poly(std::uint64_t n) {
  require_positive(n, "cn_poly");
  return {n, cn_over_qn(n).shifted(as_exp(n))};
}

std::string_view to_string(LambdaMethod m) {
  switch (m) {
    case LambdaMethod::product:
      return "product";
    case LambdaMethod::divisor:
      return "divisor";
    case LambdaMethod::eval:
      return "eval";
  }
  return "unknown";
}

LambdaResult lambda_divisor(std::uint64_t n) {
  require_positive(n, "lambda_divisor");
  const DivisorProfile profile = divisor_profile(n);
  BigInt value = profile.a[0];
  for (std::uint64_t k = 1; k < n; ++k) {
    if (!profile.a[k].is_zero()) value.addmul(profile.a[k], lucas(2 * k));
  }
  return {n, std::move(value), LambdaMethod::divisor};
}

std::vector<LambdaResult> lambda_product(std::uint64_t max_n) {
  require_positive(max_n, "lambda_product");
  const auto series = lambda_product_series(max_n);
  std::vector<LambdaResult> out;
  out.reserve(max_n);
  for (std::uint64_t n = 1; n <= max_n; ++n) out.push_back({n, series[n], LambdaMethod::product});
  return out;
}

LambdaResult lambda_eval(std::uint64_t n) {
  require_positive(n, "lambda_eval");
  const QuadInt scaled = cn_poly(n).poly.eval(QuadInt::alpha()) * alpha_pow(-as_exp(n));
  if (!scaled.is_rational())
    throw InternalInconsistency("C_n(alpha)/alpha^n has a nonzero phi-component at n = " + std::to_string(n) +
                                ": " + scaled.to_string());
  return {n, scaled.a(), LambdaMethod::eval};
}

TheoremCheck verify_theorem(std::uint64_t n) {
  require_positive(n, "verify_theorem");
  QuadInt lhs = cn_poly(n).poly.eval(QuadInt::alpha());
  const BigInt lambda = lambda_divisor(n).value;
  const QuadInt alpha_n = QuadInt::alpha() * QuadInt{fib(2 * n)} - QuadInt{fib_signed(as_exp(2 * n) - 2)};
  QuadInt rhs = QuadInt{lambda} * alpha_n;
  const bool holds = lhs == rhs;
  return {n, holds, std::move(lhs), std::move(rhs)};
}

BigInt lattice_count(std::uint64_t n, std::uint64_t b) {
  if (b != 1 && b != 2) throw std::invalid_argument("lattice_count: b must be 1 or 2");
  require_positive(n, "lattice_count");
  const auto isqrt = [](std::uint64_t v) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return static_cast<std::int64_t>(r);
  };
  const std::int64_t rx = isqrt(n);
  const std::int64_t ry = isqrt(n / b);
  const std::int64_t target = static_cast<std::int64_t>(n);
  const std::int64_t wb = static_cast<std::int64_t>(b);
  std::uint64_t count = 0;
  for (std::int64_t x = -rx; x <= rx; ++x) {
    for (std::int64_t y = -ry; y <= ry; ++y) {
      if (x * x + wb * y * y == target) ++count;
    }
  }
  return BigInt{count};
}

}  // namespace fibideal
