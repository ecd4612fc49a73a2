#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibideal {

/// One identity checked at one n. Failing checks carry both sides in
/// canonical text form so the failure can be reproduced.
struct IdentityCheck {
  std::string identity;
  std::uint64_t n = 0;
  bool passed = false;
  std::string left;
  std::string right;
};

enum class Suite { theorem, gf, lattice, sigma, shape };

inline constexpr Suite kAllSuites[] = {Suite::theorem, Suite::gf, Suite::lattice, Suite::sigma, Suite::shape};

std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

/// Pass count for one suite; an n counts as passed when every check made
/// for it passed.
struct SuiteSummary {
  Suite suite = Suite::theorem;
  std::uint64_t max_n = 0;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::vector<IdentityCheck> failures;

  bool ok() const { return checked == passed; }
};

struct VerificationReport {
  std::uint64_t max_n = 0;
  std::vector<SuiteSummary> suites;

  bool all_passed() const;
};

/// Main theorem at n as a single check.
IdentityCheck theorem_check(std::uint64_t n);

/// C_n(-1) against #{x^2 + y^2 = n}, and N(C_n(i)) against #{x^2 + 2y^2 = n}^2.
std::vector<IdentityCheck> verify_lattice(std::uint64_t n);
/// sigma(n) two ways: the profile sum a_{n,0} + 2 sum a_{n,k}, and
/// (C_n / (q-1)^2)(1) by exact division.
std::vector<IdentityCheck> verify_sigma(std::uint64_t n);
/// verify_lattice followed by verify_sigma.
std::vector<IdentityCheck> verify_specializations(std::uint64_t n);
/// Self-reciprocity and degree of C_n, the double root at q = 1,
/// lambda_n >= 0 and a_{n,n-1} = 1.
std::vector<IdentityCheck> verify_shape(std::uint64_t n);
/// Coefficients t^0 .. t^max_n of the symbolic product against q^{-n} C_n(q).
std::vector<IdentityCheck> verify_gf_identity(std::uint64_t max_n);

struct VerifyOptions {
  std::uint64_t max_n = 1;
  std::uint64_t gf_max = 60;
  std::vector<Suite> suites{std::begin(kAllSuites), std::end(kAllSuites)};
  unsigned jobs = 0;  // 0: one per hardware thread
};

/// Runs the selected suites for n = 1 .. max_n (gf up to min(max_n, gf_max)).
/// The report is identical for every value of jobs.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace fibideal
