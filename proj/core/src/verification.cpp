#include "fibideal/verification.hpp"

#include <algorithm>
#include <iterator>

#include "fibideal/gauss_int.hpp"
#include "fibideal/kr.hpp"
#include "fibideal/number_theory.hpp"
#include "fibideal/parallel.hpp"
#include "fibideal/series.hpp"

namespace fibideal {

namespace {

template <class L, class R>
IdentityCheck check(std::string identity, std::uint64_t n, const L& left, const R& right) {
  const bool ok = left == right;
  IdentityCheck c{std::move(identity), n, ok, {}, {}};
  c.left = left.to_string();
  c.right = right.to_string();
  return c;
}

IdentityCheck check_bool(std::string identity, std::uint64_t n, bool ok, std::string left, std::string right) {
  return {std::move(identity), n, ok, std::move(left), std::move(right)};
}

std::vector<IdentityCheck> checks_for(Suite suite, std::uint64_t n) {
  switch (suite) {
    case Suite::theorem:
      return {theorem_check(n)};
    case Suite::lattice:
      return verify_lattice(n);
    case Suite::sigma:
      return verify_sigma(n);
    case Suite::shape:
      return verify_shape(n);
    case Suite::gf:
      break;
  }
  return {};
}

// Folds per-n check lists (index i holds n = i + 1) into a summary.
SuiteSummary summarize(Suite suite, std::uint64_t max_n, const std::vector<std::vector<IdentityCheck>>& per_n) {
  SuiteSummary s{suite, max_n, 0, 0, {}};
  for (const auto& checks : per_n) {
    ++s.checked;
    bool all = true;
    for (const auto& c : checks) {
      if (!c.passed) {
        all = false;
        s.failures.push_back(c);
      }
    }
    if (all) ++s.passed;
  }
  return s;
}

}  // namespace

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::theorem:
      return "theorem";
    case Suite::gf:
      return "gf";
    case Suite::lattice:
      return "lattice";
    case Suite::sigma:
      return "sigma";
    case Suite::shape:
      return "shape";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kAllSuites) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool VerificationReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteSummary& s) { return s.ok(); });
}

IdentityCheck theorem_check(std::uint64_t n) {
  const TheoremCheck t = verify_theorem(n);
  return check("C_n(alpha) = lambda_n (f_2n alpha - f_2n-2)", n, t.lhs, t.rhs);
}

std::vector<IdentityCheck> verify_lattice(std::uint64_t n) {
  const LaurentPoly c = cn_poly(n).poly;
  const BigInt squares = lattice_count(n, 1);
  const BigInt twice = lattice_count(n, 2);
  return {
      check("C_n(-1) = #{x^2+y^2=n}", n, c.eval(BigInt{-1}), squares),
      check("N(C_n(i)) = #{x^2+2y^2=n}^2", n, c.eval(GaussInt::i()).norm(), twice * twice),
  };
}

std::vector<IdentityCheck> verify_sigma(std::uint64_t n) {
  const DivisorProfile profile = divisor_profile(n);
  BigInt weighted = profile.a[0];
  for (std::size_t k = 1; k < profile.a.size(); ++k) weighted.addmul(BigInt{2}, profile.a[k]);
  const BigInt expected = sigma(n);

  const LaurentPoly double_root = LaurentPoly::from_coeffs({1, -2, 1});  // (q - 1)^2
  const auto [quotient, remainder] = poly_divmod(cn_poly(n).poly, double_root);
  std::vector<IdentityCheck> out{check("a_n0 + 2 sum a_nk = sigma(n)", n, weighted, expected)};
  out.push_back(check("C_n mod (q-1)^2 = 0", n, remainder, LaurentPoly{}));
  out.push_back(check("(C_n/(q-1)^2)(1) = sigma(n)", n, quotient.eval(BigInt{1}), expected));
  return out;
}

std::vector<IdentityCheck> verify_specializations(std::uint64_t n) {
  auto out = verify_lattice(n);
  auto sig = verify_sigma(n);
  out.insert(out.end(), std::make_move_iterator(sig.begin()), std::make_move_iterator(sig.end()));
  return out;
}

std::vector<IdentityCheck> verify_shape(std::uint64_t n) {
  const LaurentPoly c = cn_poly(n).poly;
  const std::int64_t degree = 2 * static_cast<std::int64_t>(n);
  const auto lo = c.min_exp();
  const auto hi = c.max_exp();
  const bool support_ok = lo && hi && *lo == 0 && *hi == degree;
  const std::string support = lo ? "[" + std::to_string(*lo) + ", " + std::to_string(*hi) + "]" : "empty";

  const BigInt lambda = lambda_divisor(n).value;
  const BigInt leading = divisor_profile(n).a.back();

  return {
      check_bool("support of C_n is [0, 2n]", n, support_ok, support, "[0, " + std::to_string(degree) + "]"),
      check_bool("C_n self-reciprocal of degree 2n", n, is_self_reciprocal(c, degree), c.to_string(),
                 "palindromic"),
      check("C_n(1) = 0", n, c.eval(BigInt{1}), BigInt{0}),
      check("C_n'(1) = 0", n, c.derivative().eval(BigInt{1}), BigInt{0}),
      check_bool("lambda_n >= 0", n, lambda.sign() >= 0, lambda.to_string(), ">= 0"),
      check("a_n,n-1 = 1", n, leading, BigInt{1}),
  };
}

std::vector<IdentityCheck> verify_gf_identity(std::uint64_t max_n) {
  const auto lhs = kr_lhs_series(max_n, LaurentPoly::q());
  std::vector<IdentityCheck> out{check("[t^0] product = 1", 0, lhs[0], LaurentPoly{1})};
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    out.push_back(check("[t^n] product = q^-n C_n(q)", n, lhs[n], cn_poly(n).poly.shifted(-static_cast<std::int64_t>(n))));
  }
  return out;
}

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport report{options.max_n, {}};
  for (Suite suite : options.suites) {
    if (suite == Suite::gf) {
      const std::uint64_t top = std::min(options.max_n, options.gf_max);
      std::vector<std::vector<IdentityCheck>> per_n(top);
      if (top > 0) {
        auto checks = verify_gf_identity(top);
        for (auto& c : checks) {
          // t^0 is folded into n = 1.
          const std::size_t slot = c.n == 0 ? 0 : c.n - 1;
          per_n[slot].push_back(std::move(c));
        }
      }
      report.suites.push_back(summarize(suite, top, per_n));
      continue;
    }
    auto per_n = parallel_map(options.max_n, options.jobs, [&](std::size_t i) { return checks_for(suite, i + 1); });
    report.suites.push_back(summarize(suite, options.max_n, per_n));
  }
  return report;
}

}  // namespace fibideal
