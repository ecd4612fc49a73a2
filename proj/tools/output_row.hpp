#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibideal/bigint.hpp"
#include "fibideal/gauss_int.hpp"
#include "fibideal/quad_int.hpp"

namespace fibideal::cli {

/// One result row. Big numbers are carried as decimal strings so JSON
/// consumers with 53-bit numbers lose nothing.
struct OutputRow {
  std::uint64_t n = 0;
  std::string lambda;
  std::vector<std::string> cn_coeffs;  // ascending powers of q, length 2n+1
  std::optional<std::string> minus_one;
  std::optional<GaussInt> at_i;
  std::optional<QuadInt> at_alpha;
};

nlohmann::json to_json(const OutputRow& row);
OutputRow row_from_json(const nlohmann::json& j);

/// Header and body for the CSV form; coefficient lists are space separated.
std::string csv_header(const OutputRow& row);
std::string to_csv(const OutputRow& row);

nlohmann::json to_json(const QuadInt& x);
nlohmann::json to_json(const GaussInt& x);

}  // namespace fibideal::cli
