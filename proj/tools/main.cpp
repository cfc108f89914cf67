#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cubered/cubered.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cubered;

constexpr const char* kSchemaVersion = "1";

ordered_json make_document(const std::string& command, ordered_json inputs, ordered_json results,
                           const std::vector<std::string>& diagnostics) {
  return ordered_json{{"schema_version", kSchemaVersion},
                      {"command", command},
                      {"inputs", std::move(inputs)},
                      {"results", std::move(results)},
                      {"diagnostics", diagnostics}};
}

void emit_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

ordered_json rational_strings(const Poly& p) {
  ordered_json coeffs = ordered_json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(to_string(p.coeff(i)));
  return coeffs;
}

ordered_json closed_form_json(const ClosedFormValue& v, const std::string& decimal) {
  ordered_json primes = ordered_json::object();
  for (const auto& [p, c] : v.prime_log_coeffs) primes[std::to_string(p)] = to_string(c);
  return ordered_json{{"constant", to_string(v.constant)},
                      {"log_pi", to_string(v.pi_log_coeff)},
                      {"log_primes", std::move(primes)},
                      {"decimal", decimal}};
}

ordered_json report_json(const NumericReport& r) {
  ordered_json j{{"value", r.value},
                 {"error_estimate", r.error_estimate},
                 {"method", r.method},
                 {"effort", r.effort},
                 {"converged", r.converged}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string format_brief(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.3e", x);
  return buffer;
}

Integrand parse_f_spec(const std::string& spec) {
  if (spec == "loggamma") return Integrand::log_gamma_fn();
  if (spec == "exp") return Integrand::exponential();
  if (spec == "sin") return Integrand::sine();
  if (spec.rfind("poly:", 0) == 0) {
    const std::string body = spec.substr(5);
    if (body.empty())
      throw std::invalid_argument("integrand 'poly:' needs at least one coefficient");
    std::vector<Rational> coeffs;
    size_t pos = 0;
    while (pos <= body.size()) {
      const size_t comma = body.find(',', pos);
      const std::string token =
          body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      coeffs.push_back(parse_rational(token));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return Integrand::polynomial(Poly(std::move(coeffs)));
  }
  throw std::invalid_argument("unknown integrand '" + spec +
                              "' (expected loggamma, poly:c0,c1,..., exp, or sin)");
}

struct CsvWriter {
  std::ofstream out;
  explicit CsvWriter(const std::string& path) : out(path) {
    if (!out) throw std::invalid_argument("cannot open csv file '" + path + "'");
  }
};

int run_reduce(int n, const std::string& format) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > 64) throw std::invalid_argument("n must be <= 64 for reduce");
  const ReductionPlan plan = reduction_plan(n);
  if (format == "json") {
    ordered_json weights = ordered_json::array();
    ordered_json shifts = ordered_json::array();
    for (const Shell& shell : plan.shells) {
      weights.push_back(rational_strings(shell.weight));
      shifts.push_back(shell.shift);
    }
    ordered_json results{{"prefactor", to_string(plan.prefactor)},
                         {"shifts", std::move(shifts)},
                         {"weights", std::move(weights)}};
    emit_json(make_document("reduce", ordered_json{{"n", n}}, std::move(results), {}));
  } else {
    std::cout << "prefactor " << to_string(plan.prefactor) << "\n";
    for (const Shell& shell : plan.shells)
      std::cout << "G" << shell.index << " = " << to_string(shell.weight) << "\n";
  }
  return 0;
}

int run_closed_form(int n, int digits, const std::string& format) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > 200) throw std::invalid_argument("n must be <= 200 for closed-form");
  if (digits < 1 || digits > 50) throw std::invalid_argument("digits must be in [1, 50]");
  const ClosedFormValue value = log_gamma_closed_form(n);
  const std::string decimal = decimal_value(value, digits);
  if (format == "json") {
    emit_json(make_document("closed-form", ordered_json{{"n", n}, {"digits", digits}},
                            ordered_json{{"closed_form", closed_form_json(value, decimal)}}, {}));
  } else {
    std::cout << "symbolic " << to_string(value) << "\n";
    std::cout << "decimal " << decimal << "\n";
  }
  return 0;
}

int run_eval(int n, const std::string& f_spec, const std::string& method, double tol,
             std::int64_t samples, std::uint64_t seed, int threads, const std::string& format,
             const std::string& csv_path) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (tol <= 0) throw std::invalid_argument("tol must be > 0");
  const Integrand f = parse_f_spec(f_spec);
  const bool want_reduced = method == "reduced" || method == "both";
  const bool want_mc = method == "mc" || method == "both";

  std::vector<std::string> diagnostics;
  std::optional<NumericReport> reduced;
  std::optional<NumericReport> mc;
  std::optional<Rational> exact;
  if (f.kind() == IntegrandKind::polynomial) exact = poly_cube_integral(n, f.poly());
  if (want_reduced) {
    QuadPolicy policy;
    policy.target_abs_tol = tol;
    reduced = integrate_reduced(n, f, policy, &diagnostics);
  }
  if (want_mc) {
    if (samples < 2) throw std::invalid_argument("samples must be >= 2");
    mc = mc_cube(n, f, samples, seed, threads);
  }

  bool within = true;
  double discrepancy = 0.0;
  double budget = 0.0;
  if (reduced && mc) {
    discrepancy = std::abs(reduced->value - mc->value);
    budget = 4.0 * mc->error_estimate + std::max(reduced->error_estimate, tol);
    within = discrepancy <= budget;
    if (!within)
      diagnostics.push_back("reduced and monte-carlo disagree: discrepancy " +
                            format_brief(discrepancy) + " exceeds budget " +
                            format_brief(budget));
  }

  if (!csv_path.empty()) {
    CsvWriter csv(csv_path);
    csv.out << "method,value,error_estimate,effort,seed\n";
    if (reduced)
      csv.out << "reduced," << format_double(reduced->value) << ","
              << format_double(reduced->error_estimate) << "," << reduced->effort << ",\n";
    if (mc)
      csv.out << "mc," << format_double(mc->value) << "," << format_double(mc->error_estimate)
              << "," << mc->effort << "," << seed << "\n";
  }

  if (format == "json") {
    ordered_json results = ordered_json::object();
    if (exact) results["exact"] = to_string(*exact);
    if (reduced) results["reduced"] = report_json(*reduced);
    if (mc) results["mc"] = report_json(*mc);
    if (reduced && mc) {
      results["discrepancy"] = discrepancy;
      results["within_tolerance"] = within;
    }
    ordered_json inputs{{"n", n}, {"f", f_spec}, {"method", method}, {"tol", tol}};
    if (want_mc) {
      inputs["samples"] = samples;
      inputs["seed"] = seed;
      inputs["threads"] = threads;
    }
    emit_json(make_document("eval", std::move(inputs), std::move(results), diagnostics));
  } else {
    std::cout << "n " << n << " f " << f_spec << "\n";
    if (exact) std::cout << "exact " << to_string(*exact) << "\n";
    if (reduced)
      std::cout << "reduced value " << format_double(reduced->value) << " error "
                << format_brief(reduced->error_estimate) << " effort " << reduced->effort
                << " method " << reduced->method
                << (reduced->converged ? "" : " NOT-CONVERGED") << "\n";
    if (mc)
      std::cout << "mc value " << format_double(mc->value) << " stderr "
                << format_brief(mc->error_estimate) << " samples " << mc->effort << " seed "
                << seed << "\n";
    if (reduced && mc)
      std::cout << "discrepancy " << format_brief(discrepancy)
                << (within ? " within tolerance" : " EXCEEDS tolerance") << "\n";
    for (const std::string& d : diagnostics) std::cout << "warning: " << d << "\n";
  }
  return within ? 0 : 1;
}

int run_verify(int n_max, const std::string& suite, std::uint64_t seed, const std::string& format,
               const std::string& csv_path) {
  const int cap = suite == "identities" ? 30 : 12;
  if (n_max < 1) throw std::invalid_argument("n-max must be >= 1");
  if (n_max > cap)
    throw std::invalid_argument("n-max must be <= " + std::to_string(cap) + " for suite '" +
                                suite + "'");
  std::vector<VerifyCheck> checks;
  const auto append = [&checks](std::vector<VerifyCheck> more) {
    for (auto& check : more) checks.push_back(std::move(check));
  };
  if (suite == "identities" || suite == "all") append(verify_identities(n_max, seed));
  if (suite == "reduction" || suite == "all") append(verify_reduction(n_max));
  if (suite == "loggamma" || suite == "all") append(verify_loggamma(n_max, seed));

  int failures = 0;
  for (const VerifyCheck& check : checks)
    if (!check.pass) ++failures;

  if (!csv_path.empty()) {
    CsvWriter csv(csv_path);
    csv.out << "check,pass,detail\n";
    for (const VerifyCheck& check : checks)
      csv.out << check.name << "," << (check.pass ? "1" : "0") << ",\"" << check.detail << "\"\n";
  }

  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (const VerifyCheck& check : checks)
      rows.push_back(ordered_json{{"name", check.name}, {"pass", check.pass},
                                  {"detail", check.detail}});
    ordered_json results{{"checks", std::move(rows)}, {"failures", failures}};
    emit_json(make_document("verify",
                            ordered_json{{"suite", suite}, {"n_max", n_max}, {"seed", seed}},
                            std::move(results), {}));
  } else {
    for (const VerifyCheck& check : checks)
      std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << " " << check.detail
                << "\n";
    std::cout << "checks " << checks.size() << " failures " << failures << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 1-D reduction of unit-cube integrals of f(x1+...+xn)"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();

  auto* reduce_cmd = app.add_subcommand("reduce", "print the weight polynomials for dimension n");
  int reduce_n = 0;
  reduce_cmd->add_option("--n", reduce_n, "dimension")->required();
  reduce_cmd->fallthrough();

  auto* closed_cmd =
      app.add_subcommand("closed-form", "exact symbolic value of the log-gamma cube integral");
  int closed_n = 0;
  int digits = 10;
  closed_cmd->add_option("--n", closed_n, "dimension")->required();
  closed_cmd->add_option("--digits", digits, "decimal digits to render")->capture_default_str();
  closed_cmd->fallthrough();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate the cube integral numerically");
  int eval_n = 0;
  std::string f_spec;
  std::string method = "reduced";
  double tol = 1e-12;
  std::int64_t samples = 1000000;
  int threads = 0;
  std::string eval_csv;
  eval_cmd->add_option("--n", eval_n, "dimension")->required();
  eval_cmd->add_option("--f", f_spec, "integrand: loggamma, poly:c0,c1,..., exp, or sin")
      ->required();
  eval_cmd->add_option("--method", method, "evaluation route")
      ->check(CLI::IsMember({"reduced", "mc", "both"}))
      ->capture_default_str();
  eval_cmd->add_option("--tol", tol, "quadrature target absolute tolerance")
      ->capture_default_str();
  eval_cmd->add_option("--samples", samples, "Monte Carlo sample count")->capture_default_str();
  eval_cmd->add_option("--threads", threads, "Monte Carlo worker threads (0 = auto)")
      ->capture_default_str();
  eval_cmd->add_option("--csv", eval_csv, "write per-method rows to this csv file");
  eval_cmd->fallthrough();

  auto* verify_cmd = app.add_subcommand("verify", "run the exact/numeric property suites");
  int n_max = 8;
  std::string suite = "all";
  std::string verify_csv;
  verify_cmd->add_option("--n-max", n_max, "largest dimension to sweep")->capture_default_str();
  verify_cmd->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember({"identities", "reduction", "loggamma", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--csv", verify_csv, "write per-check rows to this csv file");
  verify_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*reduce_cmd) return run_reduce(reduce_n, format);
    if (*closed_cmd) return run_closed_form(closed_n, digits, format);
    if (*eval_cmd)
      return run_eval(eval_n, f_spec, method, tol, samples, seed, threads, format, eval_csv);
    if (*verify_cmd) return run_verify(n_max, suite, seed, format, verify_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command selected\n";
  return 2;
}
