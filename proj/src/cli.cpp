#include "cantor/cli.hpp"

#include <algorithm>
#include <complex>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cantor/digit_set.hpp"
#include "cantor/format.hpp"
#include "cantor/mahler.hpp"
#include "cantor/measures.hpp"
#include "cantor/polynomial.hpp"
#include "cantor/verify.hpp"

namespace cantor {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudgetExceeded = 3;

struct JobConfig {
  std::uint32_t q = 3;
  std::vector<std::int64_t> digits;
  std::uint32_t k = 4;
  std::int64_t n_min = -50;
  std::int64_t n_max = 50;
  std::uint32_t limit_terms = 0;  // 0 selects the per-frequency default
  double t_min = 10.0;
  double t_max = 30.0;
  double t_step = 0.05;
  std::uint32_t grid = 728;
  std::uint32_t depth = 40;
  std::uint64_t budget = kDefaultSymbolBudget;
  std::string routes = "direct,product,level,limit";
  std::string suite;
  std::string format = "csv";
  std::string out_path;
  std::string svg_path;
  bool use_oracle = false;
  bool no_meta = false;
};

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

std::string digits_text(const std::vector<std::int64_t>& digits) {
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(digits[i]);
  }
  return s;
}

/// Ordered key/value metadata echoed into every output.
using Meta = std::vector<std::pair<std::string, std::string>>;

void write_meta_comments(std::ostream& out, const Meta& meta) {
  for (const auto& [key, value] : meta) {
    out << "# " << key << '=' << value << '\n';
  }
}

ordered_json meta_json(const Meta& meta) {
  ordered_json j = ordered_json::object();
  for (const auto& [key, value] : meta) j[key] = value;
  return j;
}

/// Output stream selection: --out PATH or the harness-provided stream.
class OutputTarget {
 public:
  OutputTarget(const JobConfig& cfg, std::ostream& fallback) {
    if (cfg.out_path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(cfg.out_path, std::ios::binary);
    if (!file_) {
      throw std::invalid_argument("cannot open output file: " + cfg.out_path);
    }
    stream_ = &file_;
  }

  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::vector<std::string> split_routes(const std::string& routes) {
  std::vector<std::string> out;
  std::string token;
  std::stringstream ss(routes);
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

Meta base_meta(const char* command, const JobConfig& cfg) {
  Meta meta;
  meta.emplace_back("command", command);
  meta.emplace_back("q", std::to_string(cfg.q));
  meta.emplace_back("digits", digits_text(cfg.digits));
  return meta;
}

void finish_meta(Meta& meta, const JobConfig& cfg) {
  meta.emplace_back("budget", std::to_string(cfg.budget));
  meta.emplace_back("format", cfg.format);
  if (!cfg.no_meta) meta.emplace_back("generated_at", timestamp_utc());
}

int cmd_analyze(const JobConfig& cfg, std::ostream& out_stream) {
  const DigitSet ds = new_digit_set(cfg.q, cfg.digits);
  const Substitution sub = build_substitution(ds);
  const DigitPolynomial p = digit_polynomial(ds);
  const MahlerEquation equation = mahler_equation(ds);
  const CharacteristicPolynomial chi = characteristic_polynomial(equation);
  const MahlerEigenvalue eigenvalue = mahler_eigenvalue(equation);
  const double dim_digits = hausdorff_dimension(ds);
  const double dim_eigenvalue =
      std::log(eigenvalue.value) / std::log(static_cast<double>(ds.base()));

  Meta meta = base_meta("analyze", cfg);
  finish_meta(meta, cfg);

  if (cfg.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(meta);
    ordered_json r = ordered_json::object();
    r["q"] = ds.base();
    r["digits"] = ds.digits();
    r["m"] = ds.digit_count();
    r["substitution_one"] = sub.one_image.to_string();
    r["substitution_zero"] = sub.zero_image.to_string();
    r["digit_polynomial"] = p.to_string();
    r["mahler_equation"] = equation.to_string();
    r["characteristic_polynomial"] = chi.to_string();
    r["characteristic_coefficients"] = chi.coefficients;
    r["mahler_eigenvalue"] = eigenvalue.value;
    r["dimension_from_digit_count"] = dim_digits;
    r["dimension_from_eigenvalue"] = dim_eigenvalue;
    j["report"] = r;
    out_stream << j.dump(2) << '\n';
    return kExitOk;
  }

  write_meta_comments(out_stream, meta);
  out_stream << "q: " << ds.base() << '\n';
  out_stream << "digits: " << join_digits(ds.digits()) << '\n';
  out_stream << "m: " << ds.digit_count() << '\n';
  out_stream << "substitution_one: " << sub.one_image.to_string() << '\n';
  out_stream << "substitution_zero: " << sub.zero_image.to_string() << '\n';
  out_stream << "digit_polynomial: " << p.to_string() << '\n';
  out_stream << "mahler_equation: " << equation.to_string() << '\n';
  out_stream << "characteristic_polynomial: " << chi.to_string() << '\n';
  out_stream << "mahler_eigenvalue: " << float17(eigenvalue.value) << '\n';
  out_stream << "dimension_from_digit_count: " << float17(dim_digits) << '\n';
  out_stream << "dimension_from_eigenvalue: " << float17(dim_eigenvalue)
             << '\n';
  return kExitOk;
}

int cmd_sequence(const JobConfig& cfg, std::ostream& out_stream) {
  const DigitSet ds = new_digit_set(cfg.q, cfg.digits);
  const SequencePrefix prefix =
      cfg.use_oracle ? oracle_prefix(ds, cfg.k, cfg.budget)
                     : iterate_substitution(build_substitution(ds), cfg.k,
                                            cfg.budget);

  Meta meta = base_meta("sequence", cfg);
  meta.emplace_back("k", std::to_string(cfg.k));
  meta.emplace_back("oracle", cfg.use_oracle ? "true" : "false");
  finish_meta(meta, cfg);

  if (cfg.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(meta);
    j["level"] = prefix.level;
    j["length"] = prefix.bits.size();
    j["word"] = prefix.bits.to_string();
    out_stream << j.dump(2) << '\n';
    return kExitOk;
  }

  // Text mode is the bare word stream, exactly as the sequence figures print
  // it; metadata is available through the JSON format.
  prefix.bits.write_text(out_stream);
  out_stream << '\n';
  return kExitOk;
}

int cmd_fourier(const JobConfig& cfg, std::ostream& out_stream) {
  const DigitSet ds = new_digit_set(cfg.q, cfg.digits);
  if (cfg.n_min > cfg.n_max) {
    throw std::invalid_argument("--n-min must not exceed --n-max");
  }
  const std::vector<std::string> routes = split_routes(cfg.routes);
  if (routes.empty()) throw std::invalid_argument("no routes requested");
  for (const std::string& r : routes) {
    if (r != "direct" && r != "product" && r != "level" && r != "limit") {
      throw std::invalid_argument("unknown route: " + r);
    }
  }
  const auto wants = [&](const char* name) {
    return std::find(routes.begin(), routes.end(), name) != routes.end();
  };

  std::vector<std::uint64_t> ones;
  if (wants("direct")) {
    const GhostLevelMeasure mu = ghost_level_measure(ds, cfg.k, cfg.budget);
    ones.reserve(mu.support.size());
    for (const DyadicPoint& point : mu.support) ones.push_back(point.numerator);
  }

  std::vector<FourierCoefficient> rows;
  // route -> per-frequency values for the discrepancy summary
  std::map<std::string, std::vector<std::complex<double>>> by_route;
  for (std::int64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    if (wants("direct")) {
      rows.push_back(fourier_ghost_direct(ds, cfg.k, ones, n));
      by_route["direct"].push_back(rows.back().value);
    }
    if (wants("product")) {
      rows.push_back(fourier_ghost_product(ds, cfg.k, n));
      by_route["product"].push_back(rows.back().value);
    }
    if (wants("level")) {
      rows.push_back(fourier_level_measure(ds, cfg.k, n));
      by_route["level"].push_back(rows.back().value);
    }
    if (wants("limit")) {
      rows.push_back(cfg.limit_terms == 0
                         ? fourier_limit(ds, n)
                         : fourier_limit(ds, n, cfg.limit_terms));
      by_route["limit"].push_back(rows.back().value);
    }
  }

  // Max pairwise discrepancies between requested routes, in a fixed order.
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"direct", "product"}, {"product", "level"}, {"product", "limit"}};
  Meta summary;
  for (const auto& [a, b] : pairs) {
    if (!by_route.count(a) || !by_route.count(b)) continue;
    double worst = 0.0;
    for (std::size_t i = 0; i < by_route[a].size(); ++i) {
      worst = std::max(worst, std::abs(by_route[a][i] - by_route[b][i]));
    }
    summary.emplace_back("max_abs_diff " + a + "-" + b, float17(worst));
  }

  Meta meta = base_meta("fourier", cfg);
  meta.emplace_back("k", std::to_string(cfg.k));
  meta.emplace_back("n_min", std::to_string(cfg.n_min));
  meta.emplace_back("n_max", std::to_string(cfg.n_max));
  meta.emplace_back("L", cfg.limit_terms == 0 ? "auto"
                                              : std::to_string(cfg.limit_terms));
  meta.emplace_back("routes", cfg.routes);
  finish_meta(meta, cfg);

  if (cfg.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(meta);
    ordered_json r = ordered_json::array();
    for (const FourierCoefficient& c : rows) {
      ordered_json row = ordered_json::object();
      row["n"] = c.frequency;
      row["route"] = route_name(c.route);
      row["k_or_L"] = c.truncation;
      row["re"] = c.value.real();
      row["im"] = c.value.imag();
      r.push_back(std::move(row));
    }
    j["rows"] = std::move(r);
    ordered_json s = ordered_json::object();
    for (const auto& [key, value] : summary) s[key] = value;
    j["summary"] = std::move(s);
    out_stream << j.dump(2) << '\n';
    return kExitOk;
  }

  write_meta_comments(out_stream, meta);
  write_fourier_csv(out_stream, rows);
  write_meta_comments(out_stream, summary);
  return kExitOk;
}

int cmd_staircase(const JobConfig& cfg, std::ostream& out_stream) {
  const DigitSet ds = new_digit_set(cfg.q, cfg.digits);
  if (cfg.grid < 2) throw std::invalid_argument("--grid must be at least 2");
  const std::vector<CdfSample> samples =
      staircase_samples(ds, cfg.k, cfg.grid, cfg.budget);

  Meta meta = base_meta("staircase", cfg);
  meta.emplace_back("k", std::to_string(cfg.k));
  meta.emplace_back("grid", std::to_string(cfg.grid));
  finish_meta(meta, cfg);

  if (!cfg.svg_path.empty()) {
    std::ofstream svg(cfg.svg_path, std::ios::binary);
    if (!svg) {
      throw std::invalid_argument("cannot open SVG output: " + cfg.svg_path);
    }
    write_staircase_svg(svg, samples);
  }

  if (cfg.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(meta);
    ordered_json rows = ordered_json::array();
    for (const CdfSample& s : samples) {
      ordered_json row = ordered_json::object();
      row["x"] = s.x;
      row["F"] = s.value;
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    out_stream << j.dump(2) << '\n';
    return kExitOk;
  }

  write_meta_comments(out_stream, meta);
  write_staircase_csv(out_stream, samples);
  return kExitOk;
}

int cmd_probe(const JobConfig& cfg, std::ostream& out_stream) {
  const DigitSet ds = new_digit_set(cfg.q, cfg.digits);
  if (!(cfg.t_min >= 1.0) || !(cfg.t_min < cfg.t_max) || !(cfg.t_step > 0.0)) {
    throw std::invalid_argument(
        "probe grid requires 1 <= t-min < t-max and t-step > 0");
  }
  const AsymptoticProbeReport report =
      asymptotic_probe(ds, cfg.t_min, cfg.t_max, cfg.t_step);

  Meta meta = base_meta("probe", cfg);
  meta.emplace_back("t_min", float17(cfg.t_min));
  meta.emplace_back("t_max", float17(cfg.t_max));
  meta.emplace_back("t_step", float17(cfg.t_step));
  finish_meta(meta, cfg);

  if (cfg.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(meta);
    ordered_json rows = ordered_json::array();
    for (const ProbeSample& s : report.samples) {
      ordered_json row = ordered_json::object();
      row["t"] = s.t;
      row["z"] = s.z;
      row["J"] = s.truncation_terms;
      row["G"] = s.value;
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    out_stream << j.dump(2) << '\n';
    return kExitOk;
  }

  write_meta_comments(out_stream, meta);
  report.write_csv(out_stream);
  return kExitOk;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out_stream) {
  const verify::SuiteResult result = verify::run_suite(cfg.suite, cfg.budget);

  Meta meta;
  meta.emplace_back("command", "verify");
  meta.emplace_back("suite", cfg.suite);
  meta.emplace_back("budget", std::to_string(cfg.budget));
  meta.emplace_back("format", cfg.format);
  if (!cfg.no_meta) meta.emplace_back("generated_at", timestamp_utc());

  if (cfg.format == "json") {
    ordered_json j;
    j["meta"] = meta_json(meta);
    ordered_json checks = ordered_json::array();
    for (const verify::Check& c : result.checks) {
      ordered_json row = ordered_json::object();
      row["name"] = c.name;
      row["passed"] = c.passed;
      row["worst"] = c.worst;
      row["bound"] = c.bound;
      if (!c.note.empty()) row["note"] = c.note;
      checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    j["passed"] = result.passed();
    out_stream << j.dump(2) << '\n';
    return result.passed() ? kExitOk : kExitVerificationFailed;
  }

  write_meta_comments(out_stream, meta);
  for (const verify::Check& c : result.checks) {
    out_stream << (c.passed ? "ok   " : "FAIL ") << c.name
               << "  worst=" << float17(c.worst) << " bound=" << float17(c.bound);
    if (!c.note.empty()) out_stream << "  (" << c.note << ")";
    out_stream << '\n';
  }
  out_stream << "suite " << result.suite << ": "
             << (result.passed() ? "PASS" : "FAIL") << " ("
             << result.checks.size() << " checks)\n";
  return result.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  JobConfig cfg;
  CLI::App app{"missing-digit fractal analyzer: dimension, sequences, "
               "measures and Fourier coefficients"};
  app.require_subcommand(1);
  app.fallthrough(false);

  const auto add_digit_set_options = [&cfg](CLI::App* cmd) {
    cmd->add_option("--q", cfg.q, "integer base q >= 2")->required();
    cmd->add_option("--digits", cfg.digits,
                    "comma-separated digit set containing 0")
        ->required()
        ->delimiter(',');
  };
  const auto add_common_options = [&cfg](CLI::App* cmd) {
    cmd->add_option("--budget", cfg.budget,
                    "cap on materialized symbols q^k (default 1e8)");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
    cmd->add_flag("--no-meta", cfg.no_meta,
                  "omit the generated_at timestamp from metadata");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "dimension, substitution and Mahler data for a digit set");
  add_digit_set_options(analyze);
  add_common_options(analyze);

  CLI::App* sequence = app.add_subcommand(
      "sequence", "emit the level-k sequence prefix as a 0/1 word");
  add_digit_set_options(sequence);
  sequence->add_option("--k", cfg.k, "substitution level")->required();
  sequence->add_flag("--oracle", cfg.use_oracle,
                     "generate by digit membership instead of substitution");
  add_common_options(sequence);

  CLI::App* fourier = app.add_subcommand(
      "fourier", "Fourier--Stieltjes coefficients by the requested routes");
  add_digit_set_options(fourier);
  fourier->add_option("--k", cfg.k, "level for direct/product/level routes");
  fourier->add_option("--n-min", cfg.n_min, "lowest frequency");
  fourier->add_option("--n-max", cfg.n_max, "highest frequency");
  fourier->add_option("--L", cfg.limit_terms,
                      "limit-route truncation (0 = per-frequency default)");
  fourier->add_option("--routes", cfg.routes,
                      "comma list from direct,product,level,limit");
  add_common_options(fourier);

  CLI::App* staircase = app.add_subcommand(
      "staircase", "distribution-function samples of the level measure");
  add_digit_set_options(staircase);
  staircase->add_option("--k", cfg.k, "level of the approximating measure");
  staircase->add_option("--grid", cfg.grid,
                        "number of grid steps; emits grid+1 samples");
  staircase->add_option("--svg", cfg.svg_path, "also write an SVG polyline");
  add_common_options(staircase);

  CLI::App* probe = app.add_subcommand(
      "probe", "radial asymptotics of the normalized generating function");
  add_digit_set_options(probe);
  probe->add_option("--t-min", cfg.t_min, "start of the t grid (z = 1 - q^-t)");
  probe->add_option("--t-max", cfg.t_max, "end of the t grid");
  probe->add_option("--t-step", cfg.t_step, "grid step");
  add_common_options(probe);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run a built-in invariant suite over the standard family");
  verify_cmd
      ->add_option("--suite", cfg.suite,
                   "one of dimension, fourier, cdf, oracle, asymptotic")
      ->required()
      ->check(CLI::IsMember({"dimension", "fourier", "cdf", "oracle",
                             "asymptotic"}));
  add_common_options(verify_cmd);

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    OutputTarget target(cfg, out);
    if (analyze->parsed()) return cmd_analyze(cfg, target.stream());
    if (sequence->parsed()) return cmd_sequence(cfg, target.stream());
    if (fourier->parsed()) return cmd_fourier(cfg, target.stream());
    if (staircase->parsed()) return cmd_staircase(cfg, target.stream());
    if (probe->parsed()) return cmd_probe(cfg, target.stream());
    if (verify_cmd->parsed()) return cmd_verify(cfg, target.stream());
    err << "error: no command selected\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == errc::budget_exceeded ? kExitBudgetExceeded
                                             : kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace cantor
