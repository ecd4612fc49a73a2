#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "fibideal/gauss_int.hpp"
#include "fibideal/kr.hpp"
#include "fibideal/parallel.hpp"
#include "fibideal/series.hpp"
#include "fibideal/verification.hpp"
#include "output_row.hpp"
#include "report_format.hpp"

namespace fibideal::cli {

namespace {

enum class LogLevel { quiet, info, debug };

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err) {
    const char* env = std::getenv("FIBIDEAL_LOG");
    const std::string v = env ? env : "info";
    if (v == "quiet") level_ = LogLevel::quiet;
    if (v == "debug") level_ = LogLevel::debug;
  }

  void info(const std::string& msg) const {
    if (level_ >= LogLevel::info) err_ << "[info] " << msg << "\n";
  }
  void debug(const std::string& msg) const {
    if (level_ >= LogLevel::debug) err_ << "[debug] " << msg << "\n";
  }

 private:
  std::ostream& err_;
  LogLevel level_ = LogLevel::info;
};

class Stopwatch {
 public:
  std::string elapsed() const {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    return std::to_string(ms) + " ms";
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Options {
  std::uint64_t max_n = 0;
  std::uint64_t n = 0;
  std::uint64_t gf_max = 60;
  std::string method = "product";
  std::string format;
  std::string out_file;
  std::string kind = "lambda";
  std::string at = "symbolic";
  std::vector<std::string> suites;
  std::vector<std::string> eval_points;
  unsigned jobs = 0;
};

std::vector<std::string> decimal(std::span<const BigInt> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

std::string cmd_lambda(const Options& opt, const Log& log, int& status) {
  const std::vector<std::string> methods =
      opt.method == "all" ? std::vector<std::string>{"product", "divisor", "eval"}
                          : std::vector<std::string>{opt.method};
  std::map<std::string, std::vector<BigInt>> columns;
  for (const auto& m : methods) {
    Stopwatch sw;
    std::vector<BigInt> values;
    if (m == "product") {
      for (auto& r : lambda_product(opt.max_n)) values.push_back(std::move(r.value));
    } else {
      values = parallel_map(opt.max_n, opt.jobs, [&](std::size_t i) {
        return m == "divisor" ? lambda_divisor(i + 1).value : lambda_eval(i + 1).value;
      });
    }
    log.debug("lambda/" + m + ": " + std::to_string(opt.max_n) + " values in " + sw.elapsed());
    columns[m] = std::move(values);
  }

  std::ostringstream out;
  const bool csv = opt.format == "csv";
  if (csv) {
    out << "n";
    if (methods.size() == 1) {
      out << ",lambda";
    } else {
      for (const auto& m : methods) out << "," << m;
    }
    out << "\n";
  }
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 1; n <= opt.max_n; ++n) {
    const std::size_t i = n - 1;
    const BigInt& first = columns[methods.front()][i];
    const bool agree = std::all_of(methods.begin(), methods.end(), [&](const auto& m) { return columns[m][i] == first; });
    if (!agree) {
      ++mismatches;
      std::string detail = "lambda mismatch at n=" + std::to_string(n);
      for (const auto& m : methods) detail += " " + m + "=" + columns[m][i].to_string();
      log.info(detail);
    }
    if (csv) {
      out << n;
      for (const auto& m : methods) out << "," << columns[m][i];
      out << "\n";
      continue;
    }
    nlohmann::json row;
    row["n"] = n;
    if (agree) row["lambda"] = first.to_string();
    if (methods.size() > 1) {
      nlohmann::json by_method = nlohmann::json::object();
      for (const auto& m : methods) by_method[m] = columns[m][i].to_string();
      row["methods"] = std::move(by_method);
    }
    out << row.dump() << "\n";
  }
  if (mismatches != 0) status = kVerificationFailure;
  log.info("lambda: " + std::to_string(opt.max_n) + " rows, " + std::to_string(mismatches) + " mismatches");
  return out.str();
}

std::string cmd_cn(const Options& opt, const Log& log) {
  const CnPolynomial c = cn_poly(opt.n);
  OutputRow row;
  row.n = opt.n;
  row.lambda = lambda_divisor(opt.n).value.to_string();
  row.cn_coeffs = decimal(c.poly.dense_coeffs());
  auto wants = [&](const char* p) {
    return std::find(opt.eval_points.begin(), opt.eval_points.end(), p) != opt.eval_points.end();
  };
  if (wants("minus_one")) row.minus_one = c.poly.eval(BigInt{-1}).to_string();
  if (wants("i")) row.at_i = c.poly.eval(GaussInt::i());
  if (wants("alpha")) row.at_alpha = c.poly.eval(QuadInt::alpha());
  log.debug("cn: C_" + std::to_string(opt.n) + "(q) = " + c.poly.to_string());
  if (opt.format == "csv") return csv_header(row) + "\n" + to_csv(row) + "\n";
  return to_json(row).dump() + "\n";
}

std::string cmd_verify(const Options& opt, const Log& log, int& status) {
  VerifyOptions vo;
  vo.max_n = opt.max_n;
  vo.gf_max = opt.gf_max;
  vo.jobs = opt.jobs;
  if (!opt.suites.empty()) {
    vo.suites.clear();
    for (const auto& name : opt.suites) {
      const Suite s = *parse_suite(name);
      if (std::find(vo.suites.begin(), vo.suites.end(), s) == vo.suites.end()) vo.suites.push_back(s);
    }
  }
  Stopwatch sw;
  const VerificationReport report = run_verification(vo);
  log.info("verify: max_n=" + std::to_string(opt.max_n) + " finished in " + sw.elapsed());
  status = exit_code_for(report);
  if (opt.format == "json") return to_json(report).dump() + "\n";
  std::ostringstream out;
  write_report_text(report, out);
  return out.str();
}

// Series dumps: lambda -> prod (1 + F(t^m)); f -> F(t); kr -> the q-product
// at the chosen point.
std::string cmd_series(const Options& opt) {
  std::ostringstream out;
  const bool csv = opt.format == "csv";
  auto emit_integers = [&](const TruncSeries<BigInt>& s) {
    if (csv) out << "k,coefficient\n";
    for (std::size_t k = 0; k <= s.order(); ++k) {
      if (csv) {
        out << k << "," << s[k] << "\n";
      } else {
        out << nlohmann::json{{"k", k}, {"coefficient", s[k].to_string()}}.dump() << "\n";
      }
    }
  };

  if (opt.kind == "lambda") {
    emit_integers(lambda_product_series(opt.max_n));
  } else if (opt.kind == "f") {
    emit_integers(f_series(opt.max_n));
  } else if (opt.at == "one") {
    emit_integers(kr_lhs_series(opt.max_n, BigInt{1}));
  } else if (opt.at == "alpha") {
    const auto s = kr_lhs_series(opt.max_n, QuadInt::alpha());
    if (csv) out << "k,a,b\n";
    for (std::size_t k = 0; k <= s.order(); ++k) {
      if (csv) {
        out << k << "," << s[k].a() << "," << s[k].b() << "\n";
      } else {
        out << nlohmann::json{{"k", k}, {"coefficient", to_json(s[k])}}.dump() << "\n";
      }
    }
  } else {
    const auto s = kr_lhs_series(opt.max_n, LaurentPoly::q());
    if (csv) out << "k,exp,coefficient\n";
    for (std::size_t k = 0; k <= s.order(); ++k) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : s[k].terms()) {
        if (csv) {
          out << k << "," << t.exp << "," << t.coeff << "\n";
        } else {
          terms.push_back({{"exp", t.exp}, {"coeff", t.coeff.to_string()}});
        }
      }
      if (!csv) out << nlohmann::json{{"k", k}, {"coefficient", std::move(terms)}}.dump() << "\n";
    }
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{
      "fibideal: ideal-counting polynomials C_n(q) and the sequence lambda_n in exact arithmetic.\n"
      "Big numbers are printed as decimal strings. Elements of Z[phi] serialize as {a, b}\n"
      "meaning a + b*phi (alpha = (3+sqrt 5)/2 = 1 + phi); Gaussian integers as {re, im}.",
      "fibideal"};
  app.require_subcommand(1);

  const auto positive = CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40);
  const auto formats = CLI::IsMember({"json", "csv"});

  auto* lambda = app.add_subcommand("lambda", "Tabulate lambda_n for n = 1..max");
  lambda->add_option("--max", opt.max_n, "Largest n")->required()->check(positive);
  lambda->add_option("--method", opt.method, "product | divisor | eval | all")
      ->check(CLI::IsMember({"product", "divisor", "eval", "all"}));
  lambda->add_option("--format", opt.format, "json (one object per line) | csv")->check(formats);
  lambda->add_option("--out", opt.out_file, "Write results to FILE instead of standard output");
  lambda->add_option("--jobs", opt.jobs, "Worker threads (default: all cores)");

  auto* cn = app.add_subcommand("cn", "Coefficients and exact evaluations of C_n(q)");
  cn->add_option("--n", opt.n, "Index n")->required()->check(positive);
  cn->add_option("--eval", opt.eval_points, "Comma-separated subset of alpha, minus_one, i")
      ->delimiter(',')
      ->check(CLI::IsMember({"alpha", "minus_one", "i"}));
  cn->add_option("--format", opt.format, "json | csv")->check(formats);
  cn->add_option("--out", opt.out_file, "Write results to FILE instead of standard output");

  auto* verify = app.add_subcommand("verify", "Run the identity suites for n = 1..max");
  verify->add_option("--max", opt.max_n, "Largest n")->required()->check(positive);
  verify->add_option("--suites", opt.suites, "Comma-separated subset of theorem, gf, lattice, sigma, shape")
      ->delimiter(',')
      ->check(CLI::IsMember({"theorem", "gf", "lattice", "sigma", "shape"}));
  verify->add_option("--gf-max", opt.gf_max, "Cap on n for the symbolic generating-function suite")
      ->check(positive);
  verify->add_option("--jobs", opt.jobs, "Worker threads (default: all cores)");
  verify->add_option("--format", opt.format, "text (summary table) | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", opt.out_file, "Write the report to FILE instead of standard output");

  auto* series = app.add_subcommand("series", "Dump truncated power series coefficients");
  series->add_option("--kind", opt.kind, "lambda | f | kr")->check(CLI::IsMember({"lambda", "f", "kr"}));
  series->add_option("--max", opt.max_n, "Truncation order")->required()->check(positive);
  series->add_option("--at", opt.at, "For kind=kr: symbolic | alpha | one")
      ->check(CLI::IsMember({"symbolic", "alpha", "one"}));
  series->add_option("--format", opt.format, "json | csv")->check(formats);
  series->add_option("--out", opt.out_file, "Write results to FILE instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  const Log log(err);
  int status = kSuccess;
  std::string payload;
  try {
    if (*lambda) {
      payload = cmd_lambda(opt, log, status);
    } else if (*cn) {
      payload = cmd_cn(opt, log);
    } else if (*verify) {
      payload = cmd_verify(opt, log, status);
    } else {
      payload = cmd_series(opt);
    }
  } catch (const InternalInconsistency& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  }

  if (opt.out_file.empty()) {
    out << payload;
  } else {
    std::ofstream file(opt.out_file, std::ios::binary);
    if (!(file << payload)) {
      err << "error: cannot write " << opt.out_file << "\n";
      return kUsageError;
    }
    log.info("wrote " + opt.out_file);
  }
  return status;
}

}  // namespace fibideal::cli
