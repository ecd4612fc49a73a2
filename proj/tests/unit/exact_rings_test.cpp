#include <doctest.h>

#include <random>
#include <sstream>

#include "fibideal/bigint.hpp"
#include "fibideal/gauss_int.hpp"
#include "fibideal/laurent_poly.hpp"
#include "fibideal/number_theory.hpp"
#include "fibideal/quad_int.hpp"
#include "oracles.hpp"

using namespace fibideal;
using fibideal::testing::random_bigint;

namespace {

QuadInt qi(std::int64_t a, std::int64_t b) { return {BigInt{a}, BigInt{b}}; }

LaurentPoly random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<std::int64_t> exp(-5, 5);
  std::uniform_int_distribution<std::int64_t> coeff(-20, 20);
  std::vector<LaurentPoly::Term> terms;
  for (int i = count(rng); i > 0; --i) terms.push_back({exp(rng), BigInt{coeff(rng)}});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

TEST_SUITE("BigInt") {
  TEST_CASE("parsing and printing") {
    CHECK(BigInt::from_string("-12345678901234567890123").to_string() == "-12345678901234567890123");
    CHECK(BigInt::from_string("+7") == BigInt{7});
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("-"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12a"), std::invalid_argument);
    std::ostringstream os;
    os << BigInt{-42};
    CHECK(os.str() == "-42");
  }

  TEST_CASE("no overflow well past 10^600") {
    const BigInt big = BigInt{10}.pow(600);
    CHECK(big.decimal_digits() == 601);
    CHECK((big * big).decimal_digits() == 1201);
    CHECK((big + BigInt{1}) - big == BigInt{1});
    CHECK(big > BigInt{10}.pow(599));
    CHECK_FALSE(big.to_int64().has_value());
    CHECK(BigInt{-5}.to_int64() == -5);
  }

  TEST_CASE("ordering and sign") {
    CHECK(BigInt{-3} < BigInt{2});
    CHECK(BigInt{-3}.abs() == BigInt{3});
    CHECK(BigInt{0}.is_zero());
    CHECK(BigInt{-9}.sign() == -1);
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
      const BigInt a = random_bigint(rng, 80), b = random_bigint(rng, 80), c = random_bigint(rng, 80);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == BigInt{0});
      BigInt acc = a;
      REQUIRE(acc.addmul(b, c) == a + b * c);
    }
  }

  TEST_CASE("units") {
    CHECK(ring_traits<BigInt>::invert(BigInt{-1}) == BigInt{-1});
    CHECK_FALSE(ring_traits<BigInt>::invert(BigInt{2}).has_value());
  }
}

TEST_SUITE("QuadInt") {
  TEST_CASE("quad_mul examples") {
    CHECK(quad_mul(qi(0, 1), qi(0, 1)) == qi(1, 1));
    CHECK(quad_mul(qi(1, 1), qi(2, -1)) == qi(1, 0));
    CHECK(quad_mul(qi(1, 1), qi(1, 1)) == qi(2, 3));
  }

  TEST_CASE("quad_norm examples") {
    CHECK(quad_norm(qi(1, 1)) == BigInt{1});
    CHECK(quad_norm(qi(0, 1)) == BigInt{-1});
    CHECK(quad_norm(qi(3, 0)) == BigInt{9});
  }

  TEST_CASE("conjugation and inverses") {
    CHECK(QuadInt::phi().conj() == qi(1, -1));
    CHECK(QuadInt::alpha().inverse() == QuadInt::alpha_inverse());
    CHECK(QuadInt::phi().inverse() == qi(-1, 1));  // phi^{-1} = phi - 1
    CHECK_FALSE(qi(2, 0).inverse().has_value());
    CHECK(QuadInt::alpha() + QuadInt::alpha_inverse() == QuadInt{3});
  }

  TEST_CASE("alpha_pow examples") {
    CHECK(alpha_pow(0) == qi(1, 0));
    CHECK(alpha_pow(1) == qi(1, 1));
    CHECK(alpha_pow(2) == qi(2, 3));
    CHECK(alpha_pow(-1) == qi(2, -1));
    // cross-check against the {1, phi} basis formula f_{2n-1} + f_{2n} phi
    CHECK(alpha_pow(2) == QuadInt{fib(3), fib(4)});
  }

  TEST_CASE("alpha powers: inverse pairs, Fibonacci and Lucas forms") {
    for (std::int64_t n = -50; n <= 50; ++n) {
      REQUIRE(alpha_pow(n) * alpha_pow(-n) == QuadInt{1});
    }
    for (std::int64_t n = 1; n <= 50; ++n) {
      const auto un = static_cast<std::uint64_t>(n);
      REQUIRE(alpha_pow(n) == QuadInt{fib(2 * un)} * QuadInt::alpha() - QuadInt{fib(2 * un - 2)});
      REQUIRE(alpha_pow(n) == QuadInt{fib(2 * un - 1), fib(2 * un)});
    }
    for (std::int64_t k = 0; k <= 50; ++k) {
      const QuadInt s = alpha_pow(k) + alpha_pow(-k);
      REQUIRE(s.is_rational());
      REQUIRE(s.a() == lucas(2 * static_cast<std::uint64_t>(k)));
    }
  }

  TEST_CASE("norm is multiplicative on random pairs") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
      const QuadInt x{random_bigint(rng, 30), random_bigint(rng, 30)};
      const QuadInt y{random_bigint(rng, 30), random_bigint(rng, 30)};
      REQUIRE(quad_norm(x * y) == quad_norm(x) * quad_norm(y));
    }
  }

  TEST_CASE("to_string") {
    CHECK(qi(8, 12).to_string() == "8+12*phi");
    CHECK(qi(2, -1).to_string() == "2-1*phi");
  }
}

TEST_SUITE("GaussInt") {
  TEST_CASE("arithmetic and norm") {
    const GaussInt i = GaussInt::i();
    CHECK(i * i == GaussInt{-1});
    CHECK(GaussInt{BigInt{3}, BigInt{4}}.norm() == BigInt{25});
    CHECK(i.inverse() == GaussInt{BigInt{0}, BigInt{-1}});
    CHECK_FALSE(GaussInt{BigInt{1}, BigInt{1}}.inverse().has_value());
    std::mt19937_64 rng(3);
    for (int k = 0; k < 300; ++k) {
      const GaussInt x{random_bigint(rng, 25), random_bigint(rng, 25)};
      const GaussInt y{random_bigint(rng, 25), random_bigint(rng, 25)};
      REQUIRE((x * y).norm() == x.norm() * y.norm());
    }
  }
}

TEST_SUITE("LaurentPoly") {
  TEST_CASE("canonical form drops zeros") {
    const auto p = LaurentPoly::from_terms({{2, BigInt{1}}, {0, BigInt{3}}, {2, BigInt{-1}}, {-1, BigInt{0}}});
    CHECK(p == LaurentPoly{3});
    CHECK(p.terms().size() == 1);
    const auto q = LaurentPoly::q();
    CHECK((q - q).is_zero());
    CHECK((q * q.inverse().value()) == LaurentPoly{1});
    CHECK(LaurentPoly::from_coeffs({0, 0, 5}).min_exp() == 2);
    CHECK_FALSE(LaurentPoly{}.max_exp().has_value());
  }

  TEST_CASE("laurent_eval examples") {
    const auto p = LaurentPoly::from_coeffs({1, -2, 1});  // q^2 - 2q + 1
    CHECK(laurent_eval(p, BigInt{-1}) == BigInt{4});
    const auto r = LaurentPoly::from_coeffs({1, 0, 1}, -1);  // q + 1/q
    CHECK(laurent_eval(r, QuadInt::alpha()) == QuadInt{3});
    CHECK_THROWS_AS(laurent_eval(r, BigInt{0}), std::domain_error);
    CHECK_THROWS_AS(laurent_eval(r, QuadInt{2}), std::domain_error);
    // polynomials evaluate anywhere
    CHECK(laurent_eval(p, BigInt{0}) == BigInt{1});
    CHECK(laurent_eval(LaurentPoly{}, GaussInt::i()) == GaussInt{0});
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(4);
    const std::vector<QuadInt> quad_points{QuadInt::alpha(), QuadInt::phi(), QuadInt::alpha_inverse()};
    const std::vector<GaussInt> gauss_points{GaussInt::i(), GaussInt{-1}};
    for (int k = 0; k < 200; ++k) {
      const LaurentPoly p = random_laurent(rng), r = random_laurent(rng);
      for (const auto& x : quad_points) {
        REQUIRE((p * r).eval(x) == p.eval(x) * r.eval(x));
        REQUIRE((p + r).eval(x) == p.eval(x) + r.eval(x));
      }
      for (const auto& x : gauss_points) REQUIRE((p * r).eval(x) == p.eval(x) * r.eval(x));
      REQUIRE((p * r).eval(BigInt{-1}) == p.eval(BigInt{-1}) * r.eval(BigInt{-1}));
    }
  }

  TEST_CASE("sparse Horner agrees with term-by-term powers") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
      const LaurentPoly p = random_laurent(rng);
      std::vector<std::pair<std::int64_t, BigInt>> terms;
      for (const auto& t : p.terms()) terms.emplace_back(t.exp, t.coeff);
      REQUIRE(p.eval(QuadInt::alpha()) ==
              testing::eval_by_powers(terms, QuadInt::alpha(), QuadInt::alpha_inverse()));
      REQUIRE(p.eval(GaussInt::i()) == testing::eval_by_powers(terms, GaussInt::i(), GaussInt::i().conj()));
    }
  }

  TEST_CASE("is_self_reciprocal examples") {
    CHECK(is_self_reciprocal(LaurentPoly::from_coeffs({1, -2, 1}), 2));
    CHECK(is_self_reciprocal(LaurentPoly::from_coeffs({1, -1, 0, -1, 1}), 4));
    CHECK_FALSE(is_self_reciprocal(LaurentPoly::from_coeffs({0, 1, 1}), 2));
    CHECK_FALSE(is_self_reciprocal(LaurentPoly::from_coeffs({1, -2, 1}), 3));
  }

  TEST_CASE("poly_divmod and derivative") {
    const auto c2 = LaurentPoly::from_coeffs({1, -1, 0, -1, 1});
    const auto [quo, rem] = poly_divmod(c2, LaurentPoly::from_coeffs({1, -2, 1}));
    CHECK(quo == LaurentPoly::from_coeffs({1, 1, 1}));
    CHECK(rem.is_zero());
    const auto [q2, r2] = poly_divmod(LaurentPoly::from_coeffs({5, 0, 1}), LaurentPoly::from_coeffs({-1, 1}));
    CHECK(q2 == LaurentPoly::from_coeffs({1, 1}));
    CHECK(r2 == LaurentPoly{6});
    CHECK_THROWS_AS(poly_divmod(c2, LaurentPoly::from_coeffs({1, 2})), std::domain_error);
    CHECK_THROWS_AS(poly_divmod(LaurentPoly::from_coeffs({1, 1}, -1), LaurentPoly{1}), std::domain_error);
    CHECK(c2.derivative() == LaurentPoly::from_coeffs({-1, 0, -3, 4}));
    CHECK(LaurentPoly::from_coeffs({1, 0, 1}, -1).derivative() == LaurentPoly::from_coeffs({-1, 0, 1}, -2));
  }

  TEST_CASE("printing") {
    CHECK(LaurentPoly::from_coeffs({1, -2, 1}).to_string() == "q^2 - 2*q + 1");
    CHECK(LaurentPoly::from_coeffs({1, -2, 1}, -1).to_string() == "q - 2 + q^-1");
    CHECK(LaurentPoly{}.to_string() == "0");
  }
}
