#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "altzeta/mzv/amzv.hpp"
#include "altzeta/special/rm.hpp"
#include "altzeta/verify/checks.hpp"
#include "altzeta/verify/reduction.hpp"

using namespace altzeta;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kConfigError = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int order = 8;
  int degree = 8;
  std::optional<int> window;
  std::optional<int> weight;
  int digits = 30;
  std::string format;  // empty: the command's own default
  bool normalize_even = false;
  std::string suite = "all";
  int k_max = 4;
  int m_max = 3;
  int random_count = 50;
};

OutputFormat output_format(const std::string& f) {
  if (f == "latex") return OutputFormat::Latex;
  if (f == "text") return OutputFormat::Text;
  return OutputFormat::Json;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void validate_common(const RunConfig& c) {
  require(c.order >= 1, "--order must be at least 1");
  require(c.degree >= 0, "--degree must be non-negative");
  require(!c.window || *c.window >= 1, "--window must be positive");
  require(!c.weight || *c.weight >= 1, "--weight must be positive");
  require(c.digits >= 10 && c.digits <= kMaxDigits,
          "--digits must lie in [10, " + std::to_string(kMaxDigits) + "]");
}

void emit(const CheckReport& r, const RunConfig& c) {
  if (c.format == "text") {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s)\n";
    for (const auto& s : r.subchecks)
      if (!s.passed) std::cout << "  failed: " << s.name << (s.detail.empty() ? "" : " [" + s.detail + "]") << "\n";
  } else {
    std::cout << to_json(r) << "\n";
  }
  std::cout.flush();
}

int cmd_verify(const RunConfig& c) {
  validate_common(c);
  require(c.suite == "symbolic" || c.suite == "numeric" || c.suite == "all",
          "--suite must be symbolic, numeric or all");
  require(c.k_max >= 0 && c.m_max >= 1, "--kmax must be >= 0 and --mmax >= 1");
  std::vector<std::function<std::vector<CheckReport>()>> checks;
  auto one = [](auto f) { return [f] { return std::vector<CheckReport>{f()}; }; };
  if (c.suite != "numeric") {
    checks.push_back(one([&] { return check_d2_channel(std::max(12, c.order)); }));
    checks.push_back(one([&] { return check_main_theorem(c.order, c.degree); }));
    checks.push_back(one([&] { return check_goal_identity(c.order, c.degree); }));
    checks.push_back(one([&] { return check_prop_resummation(c.order); }));
    checks.push_back([&] { return check_lemma_suite(c.order, c.random_count); });
  }
  if (c.suite != "symbolic") {
    checks.push_back(one([&] { return check_beta_identity(c.digits); }));
    checks.push_back(one([&] { return check_corollary_numeric(c.k_max, c.m_max, c.digits); }));
    checks.push_back(one([&] { return check_example_and_rm(c.digits); }));
    checks.push_back(one([&] { return check_amzv_consistency(c.digits, 10); }));
  }
  bool all = true;
  for (const auto& run : checks)
    for (const auto& r : run()) {
      emit(r, c);
      all = all && r.passed;
    }
  return all ? kOk : kCheckFailed;
}

int cmd_reduce(const RunConfig& c, int k, int m) {
  validate_common(c);
  require(k >= 0, "--k must be non-negative");
  require(m >= 1, "--m must be at least 1");
  // Truncations are sized automatically; explicit ones must be large enough.
  if (c.window) require(*c.window >= 2 * m - 1, "insufficient truncation: --window must be >= 2m-1");
  if (c.weight) require(*c.weight >= k + 2 * m, "insufficient truncation: --weight must be >= k+2m");
  const IdentityRecord rec = reduce_identity(k, m, c.digits, c.normalize_even);
  if (c.format == "latex") std::cout << to_latex(rec) << "\n";
  else if (c.format == "text") std::cout << to_text(rec) << "\n";
  else std::cout << to_json(rec) << "\n";
  return kOk;
}

int cmd_rm(const RunConfig& c, int max_m) {
  require(max_m >= 1, "--max must be at least 1");
  const auto r = rm_coefficients(max_m);
  if (c.format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int m = 1; m <= max_m; ++m) out.push_back({{"m", m}, {"r", r[m - 1].to_fraction()}});
    std::cout << out.dump() << "\n";
    return kOk;
  }
  for (int m = 1; m <= max_m; ++m) {
    const Rational& q = r[m - 1];
    if (c.format == "latex")
      std::cout << "r_{" << m << "} = "
                << (q.is_integer() ? q.to_fraction()
                                   : "\\frac{" + q.numerator().get_str() + "}{" + q.denominator().get_str() + "}")
                << "\n";
    else
      std::cout << "r_" << m << " = " << q.to_fraction() << "\n";
  }
  return kOk;
}

int cmd_eval(const RunConfig& c, const std::string& text) {
  validate_common(c);
  MzvIndex index;
  try {
    index = MzvIndex::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("cannot parse index: ") + e.what());
  }
  if (!index.convergent()) throw ConfigError("divergent index " + text);
  const std::string value = eval_amzv(index, c.digits).to_fixed(c.digits);
  if (c.format == "json") {
    nlohmann::ordered_json j{{"index", index.to_string()}, {"digits", c.digits}, {"value", value}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
  return kOk;
}

int cmd_operator(const RunConfig& c, const std::string& which, bool all_orders) {
  validate_common(c);
  const int N = c.order;
  const SWindow window = c.window ? SWindow{-*c.window, *c.window} : SWindow::for_order(N);
  OperatorSeries op;
  if (which == "d1") op = build_D1(N, window);
  else if (which == "d2") op = build_D2(N, window);
  else if (which == "d3") op = build_D3(N, window);
  else if (which == "l1") op = build_L1(N);
  else if (which == "l2") op = build_L2(N);
  else throw ConfigError("--which must be one of d1, d2, d3, l1, l2");
  const OutputFormat fmt = output_format(c.format);
  const int first = all_orders ? 0 : N;
  if (fmt == OutputFormat::Json) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int n = first; n <= N; ++n)
      coeffs.push_back({{"x_order", n},
                        {"terms", nlohmann::ordered_json::parse(format_operator_coefficient(op[n], fmt))}});
    nlohmann::ordered_json j{{"which", which}, {"substitution", to_string(op.substitution)}, {"coefficients", coeffs}};
    std::cout << j.dump() << "\n";
    return kOk;
  }
  for (int n = first; n <= N; ++n) {
    if (all_orders) std::cout << "[x^" << n << "] ";
    std::cout << format_operator_coefficient(op[n], fmt) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact operator calculus and depth reduction for alternating multiple zeta values", "altzeta"};
  app.set_config("--config", "", "key=value file mirroring the long flags");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  app.add_option("--order", c.order, "x-truncation order N")->capture_default_str();
  app.add_option("--degree", c.degree, "degree D of the generic test function")->capture_default_str();
  app.add_option("--window", c.window, "s-window half-width");
  app.add_option("--weight", c.weight, "zeta weight bound W");
  app.add_option("--digits", c.digits, "decimal digits for numerics")->capture_default_str();
  app.add_option("--format", c.format, "json, latex or text (verify and reduce default to json, the rest to text)")
      ->check(CLI::IsMember({"json", "latex", "text"}));
  app.add_flag("--normalize-even", c.normalize_even, "rewrite zeta(2k) as rational multiples of zeta(2)^k");

  auto* verify = app.add_subcommand("verify", "run verification suites, one JSON report per line");
  verify->add_option("--suite", c.suite, "symbolic, numeric or all")->capture_default_str();
  verify->add_option("--kmax", c.k_max, "largest k for the numeric corollary check")->capture_default_str();
  verify->add_option("--mmax", c.m_max, "largest m for the numeric corollary check")->capture_default_str();
  verify->add_option("--random", c.random_count, "randomized inputs per lemma")->capture_default_str();

  int k = 0, m = 1;
  auto* reduce = app.add_subcommand("reduce", "emit the depth-reduction identity for zeta({1}^k, 2m bar)");
  reduce->add_option("--k", k, "number of leading ones")->required();
  reduce->add_option("--m", m, "half the barred last entry")->required();

  int max_m = 4;
  auto* rm = app.add_subcommand("rm", "rational coefficients r_1..r_max");
  rm->add_option("--max", max_m, "largest m")->capture_default_str();

  std::string index;
  auto* eval = app.add_subcommand("eval", "evaluate an alternating MZV, e.g. 1,1,-2");
  eval->add_option("--index", index, "comma-separated signed integers")->required();

  std::string which;
  bool all_orders = false;
  auto* op = app.add_subcommand("operator", "print an operator coefficient [x^order]");
  op->add_option("--which", which, "d1, d2, d3, l1 or l2")->required();
  op->add_flag("--all", all_orders, "print every coefficient up to --order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  if (c.format.empty()) c.format = *verify || *reduce ? "json" : "text";
  try {
    if (*verify) return cmd_verify(c);
    if (*reduce) return cmd_reduce(c, k, m);
    if (*rm) return cmd_rm(c, max_m);
    if (*eval) return cmd_eval(c, index);
    if (*op) return cmd_operator(c, which, all_orders);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ResidualFailure& e) {
    std::cerr << "error: " << e.what() << " (record withheld)\n";
    return kCheckFailed;
  } catch (const DivergentIndex& e) {
    std::cerr << "error: divergent: " << e.what() << "\n";
    return kConfigError;
  } catch (const UnsupportedIndex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const TruncationError& e) {
    std::cerr << "error: insufficient truncation: " << e.what() << "\n";
    return kConfigError;
  } catch (const WindowError& e) {
    std::cerr << "error: insufficient truncation: " << e.what() << "\n";
    return kConfigError;
  } catch (const InsufficientJetOrder& e) {
    std::cerr << "error: insufficient truncation: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kConfigError;
}
