#pragma once

#include <ostream>

#include <json.hpp>

#include "fibideal/verification.hpp"

namespace fibideal::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Summary table, one "suite: passed/checked PASS|FAIL" line per suite,
/// followed by a witness line for every failing check.
void write_report_text(const VerificationReport& report, std::ostream& out);
nlohmann::json to_json(const VerificationReport& report);
int exit_code_for(const VerificationReport& report);

}  // namespace fibideal::cli
