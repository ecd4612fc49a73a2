#include <doctest.h>

#include <random>

#include "fibideal/laurent_poly.hpp"
#include "fibideal/number_theory.hpp"
#include "fibideal/quad_int.hpp"
#include "fibideal/series.hpp"
#include "oracles.hpp"

using namespace fibideal;

namespace {

using IntSeries = TruncSeries<BigInt>;

IntSeries ints(std::size_t order, std::initializer_list<std::int64_t> cs) {
  return IntSeries(order, std::vector<BigInt>(cs.begin(), cs.end()));
}

IntSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::vector<BigInt> c;
  for (std::size_t i = 0; i <= order; ++i) c.push_back(testing::random_bigint(rng, 12));
  return IntSeries(order, std::move(c));
}

}  // namespace

TEST_CASE("f_series examples") {
  CHECK(f_series(5) == ints(5, {0, 1, 3, 8, 21, 55}));
  CHECK(f_series(0) == ints(0, {0}));
  CHECK(f_series(40)[0] == BigInt{0});
  const auto f = f_series(60);
  for (std::uint64_t n = 1; n <= 60; ++n) REQUIRE(f[n] == fib(2 * n));
}

TEST_CASE("F(t) (1 - 3t + t^2) = t at every order") {
  for (std::size_t order = 1; order <= 80; ++order) {
    const auto product = f_series(order) * ints(order, {1, -3, 1});
    REQUIRE(product == IntSeries::monomial(order, BigInt{1}, 1));
  }
  // and F(t) = t * (1 - 3t + t^2)^{-1}
  const auto via_inverse = IntSeries::monomial(30, BigInt{1}, 1) * series_inverse(ints(30, {1, -3, 1}));
  CHECK(via_inverse == f_series(30));
}

TEST_CASE("series_mul examples") {
  const auto a = ints(4, {2, -1, 0, 7, 3});
  CHECK(series_mul(a, IntSeries::one(4)) == a);
  CHECK(series_mul(ints(2, {1, 1}), ints(2, {1, -1})) == ints(2, {1, 0, -1}));
  CHECK(series_mul(f_series(4), ints(4, {1, -3, 1})) == ints(4, {0, 1, 0, 0, 0}));
}

TEST_CASE("mismatched orders truncate to the smaller") {
  const auto s = ints(5, {1, 1, 1, 1, 1, 1}) + ints(2, {1, 2, 3});
  CHECK(s.order() == 2);
  CHECK(s == ints(2, {2, 3, 4}));
  CHECK((ints(5, {1, 1}) * ints(3, {1, 1})).order() == 3);
  CHECK(ints(5, {1, 2, 3, 4}).truncated(2) == ints(2, {1, 2, 3}));
}

TEST_CASE("series_inverse") {
  CHECK(series_inverse(ints(3, {1, -1})) == ints(3, {1, 1, 1, 1}));
  CHECK(series_inverse(ints(3, {1, -3, 1})) == ints(3, {1, 3, 8, 21}));
  CHECK(series_inverse(ints(3, {-1, 2})) == ints(3, {-1, -2, -4, -8}));
  CHECK_THROWS_AS(series_inverse(ints(3, {0, 1})), std::domain_error);
  CHECK_THROWS_AS(series_inverse(ints(3, {2, 1})), std::domain_error);
}

TEST_CASE("substitute_power") {
  CHECK(substitute_power(f_series(5), 2) == ints(5, {0, 0, 1, 0, 3, 0}));
  const auto a = ints(4, {5, 4, 3, 2, 1});
  CHECK(substitute_power(a, 1) == a);
  CHECK(substitute_power(ints(2, {1, 1}), 3) == ints(2, {1}));
  CHECK_THROWS_AS(substitute_power(a, 0), std::invalid_argument);
}

TEST_CASE("ring properties of series arithmetic on random inputs") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 60; ++k) {
    const auto a = random_series(rng, 12), b = random_series(rng, 12), c = random_series(rng, 12);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    auto unit = a;
    unit = unit - IntSeries::monomial(12, unit[0], 0) + IntSeries::one(12);  // force constant term 1
    const auto inv = series_inverse(unit);
    REQUIRE(unit * inv == IntSeries::one(12));
    REQUIRE(inv * unit == IntSeries::one(12));
  }
}

TEST_CASE("lambda_product_series against enumeration") {
  const auto s = lambda_product_series(25);
  CHECK(s[0] == BigInt{1});
  CHECK(s[1] == BigInt{1});
  CHECK(s[2] == BigInt{4});
  CHECK(s[3] == BigInt{10});
  CHECK(s[4] == BigInt{29});
  for (std::uint64_t n = 1; n <= 25; ++n) REQUIRE(s[n] == testing::lambda_by_enumeration(n));
  // (1 + F(t))(1 + F(t^2)) already fixes t^1 and t^2
  const auto one = IntSeries::one(2);
  const auto two_factors = (one + f_series(2)) * (one + substitute_power(f_series(2), 2));
  CHECK(two_factors == ints(2, {1, 1, 4}));
}

TEST_CASE("truncating the product at m = N is exact") {
  // Extra factors beyond m = N change nothing modulo t^{N+1}.
  const std::size_t order = 15;
  const auto one = IntSeries::one(order);
  const auto f = f_series(order);
  auto longer = lambda_product_series(order);
  for (std::size_t m = order + 1; m <= 3 * order; ++m) longer = longer * (one + substitute_power(f, m));
  CHECK(longer == lambda_product_series(order));
}

TEST_CASE("kr_lhs_series examples") {
  const auto q = LaurentPoly::q();
  const auto symbolic = kr_lhs_series(4, q);
  CHECK(symbolic[0] == LaurentPoly{1});
  CHECK(symbolic[1] == LaurentPoly::from_coeffs({1, -2, 1}, -1));
  CHECK(symbolic[2] == LaurentPoly::from_coeffs({1, -1, 0, -1, 1}, -2));

  const auto at_alpha = kr_lhs_series(4, QuadInt::alpha());
  const std::int64_t expected[] = {1, 1, 4, 10, 29};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(at_alpha[n] == QuadInt{expected[n]});

  const auto at_one = kr_lhs_series(10, BigInt{1});
  CHECK(at_one == IntSeries::one(10));

  CHECK_THROWS_AS(kr_lhs_series(4, BigInt{0}), std::domain_error);
  CHECK_THROWS_AS(kr_lhs_series(4, QuadInt{2}), std::domain_error);
  CHECK_THROWS_AS(kr_lhs_series(4, LaurentPoly::from_coeffs({1, 1})), std::domain_error);
}

TEST_CASE("each factor splits as 1 + (s - 2) t^m / (1 - s t^m + t^2m)") {
  const LaurentPoly s = LaurentPoly::from_coeffs({1, 0, 1}, -1);  // q + 1/q
  for (std::size_t m = 1; m <= 10; ++m) REQUIRE(kr_factor(30, m, s) == kr_factor_split(30, m, s));
}

TEST_CASE("at q = alpha the product equals prod (1 + F(t^m))") {
  const std::size_t order = 60;
  const auto at_alpha = kr_lhs_series(order, QuadInt::alpha());
  const auto lambdas = lambda_product_series(order);
  for (std::size_t n = 0; n <= order; ++n) {
    REQUIRE(at_alpha[n].is_rational());
    REQUIRE(at_alpha[n].a() == lambdas[n]);
  }
  // factor by factor: with s = 3 each factor is 1 + F(t^m)
  const auto one = IntSeries::one(order);
  for (std::size_t m = 1; m <= 8; ++m) REQUIRE(kr_factor(order, m, BigInt{3}) == one + substitute_power(f_series(order), m));
}
