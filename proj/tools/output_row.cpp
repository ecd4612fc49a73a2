#include "output_row.hpp"

namespace fibideal::cli {

nlohmann::json to_json(const QuadInt& x) { return {{"a", x.a().to_string()}, {"b", x.b().to_string()}}; }

nlohmann::json to_json(const GaussInt& x) { return {{"re", x.re().to_string()}, {"im", x.im().to_string()}}; }

nlohmann::json to_json(const OutputRow& row) {
  nlohmann::json j;
  j["n"] = row.n;
  j["lambda"] = row.lambda;
  j["cn_coeffs"] = row.cn_coeffs;
  if (row.minus_one || row.at_i || row.at_alpha) {
    nlohmann::json ev = nlohmann::json::object();
    if (row.minus_one) ev["minus_one"] = *row.minus_one;
    if (row.at_i) ev["i"] = to_json(*row.at_i);
    if (row.at_alpha) ev["alpha"] = to_json(*row.at_alpha);
    j["evaluations"] = std::move(ev);
  }
  return j;
}

OutputRow row_from_json(const nlohmann::json& j) {
  OutputRow row;
  row.n = j.at("n").get<std::uint64_t>();
  row.lambda = j.at("lambda").get<std::string>();
  if (j.contains("cn_coeffs")) row.cn_coeffs = j.at("cn_coeffs").get<std::vector<std::string>>();
  if (j.contains("evaluations")) {
    const auto& ev = j.at("evaluations");
    if (ev.contains("minus_one")) row.minus_one = ev.at("minus_one").get<std::string>();
    if (ev.contains("i")) {
      row.at_i = GaussInt{BigInt::from_string(ev.at("i").at("re").get<std::string>()),
                          BigInt::from_string(ev.at("i").at("im").get<std::string>())};
    }
    if (ev.contains("alpha")) {
      row.at_alpha = QuadInt{BigInt::from_string(ev.at("alpha").at("a").get<std::string>()),
                             BigInt::from_string(ev.at("alpha").at("b").get<std::string>())};
    }
  }
  return row;
}

std::string csv_header(const OutputRow& row) {
  std::string h = "n,lambda,cn_coeffs";
  if (row.minus_one) h += ",minus_one";
  if (row.at_i) h += ",i_re,i_im";
  if (row.at_alpha) h += ",alpha_a,alpha_b";
  return h;
}

std::string to_csv(const OutputRow& row) {
  std::string s = std::to_string(row.n) + "," + row.lambda + ",";
  for (std::size_t k = 0; k < row.cn_coeffs.size(); ++k) {
    if (k) s += ' ';
    s += row.cn_coeffs[k];
  }
  if (row.minus_one) s += "," + *row.minus_one;
  if (row.at_i) s += "," + row.at_i->re().to_string() + "," + row.at_i->im().to_string();
  if (row.at_alpha) s += "," + row.at_alpha->a().to_string() + "," + row.at_alpha->b().to_string();
  return s;
}

}  // namespace fibideal::cli
