#include "report_format.hpp"

namespace fibideal::cli {

void write_report_text(const VerificationReport& report, std::ostream& out) {
  for (const auto& s : report.suites) {
    out << to_string(s.suite) << ": " << s.passed << "/" << s.checked << (s.ok() ? " PASS" : " FAIL") << "\n";
  }
  for (const auto& s : report.suites) {
    for (const auto& f : s.failures) {
      out << "FAIL " << to_string(s.suite) << " n=" << f.n << " [" << f.identity << "]\n"
          << "  left:  " << f.left << "\n"
          << "  right: " << f.right << "\n";
    }
  }
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& s : report.suites) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : s.failures) {
      failures.push_back({{"identity", f.identity}, {"n", f.n}, {"left", f.left}, {"right", f.right}});
    }
    suites.push_back({{"suite", std::string(to_string(s.suite))},
                      {"max_n", s.max_n},
                      {"checked", s.checked},
                      {"passed", s.passed},
                      {"status", s.ok() ? "PASS" : "FAIL"},
                      {"failures", std::move(failures)}});
  }
  return {{"max_n", report.max_n}, {"all_passed", report.all_passed()}, {"suites", std::move(suites)}};
}

int exit_code_for(const VerificationReport& report) {
  return report.all_passed() ? kSuccess : kVerificationFailure;
}

}  // namespace fibideal::cli
