#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "periodlab/harness.hpp"

// periodlab: exact-arithmetic window ratios of multiplicative functions
// over arithmetic progressions, their smallest periods (closed form and
// brute force), and verification sweeps.
//
// Exit codes: 0 ok, 1 formula/oracle disagreement or invariant violation,
// 2 invalid input, 3 capacity exceeded / search exhausted.

namespace {

using namespace periodlab;

Range parse_range(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    const std::int64_t v = parse_integer(text).convert_to<std::int64_t>();
    return Range{v, v};
  }
  Range r;
  r.lo = parse_integer(text.substr(0, colon)).convert_to<std::int64_t>();
  r.hi = parse_integer(text.substr(colon + 1)).convert_to<std::int64_t>();
  return r;
}

Integer parse_positive(const std::string& text, const char* what) {
  const Integer v = parse_integer(text);
  if (v < 1) {
    throw std::invalid_argument(std::string(what) + " must be >= 1");
  }
  return v;
}

void check_method(const std::string& method) {
  if (method != "formula" && method != "oracle" && method != "both") {
    throw std::invalid_argument("--method must be formula, oracle or both");
  }
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") {
    throw std::invalid_argument("--format must be json or csv");
  }
}

std::string optional_integer_json(const std::optional<Integer>& v) {
  return v ? "\"" + v->str() + "\"" : "null";
}

int run_eval(const ProgressionParams& params, const std::string& n_text,
             const std::string& function_tag) {
  const MultiplicativeFunction f = make_builtin(function_tag);
  const Integer n = parse_positive(n_text, "--n");
  std::cout << rational_to_string(g_eval(f, params, n)) << "\n";
  return 0;
}

int run_period(const ProgressionParams& params, const std::string& function_tag,
               const std::string& method, const std::string& format,
               const Integer& budget) {
  check_method(method);
  check_format(format);
  const bool want_formula = method != "oracle";
  const bool want_oracle = method != "formula";
  if (want_formula && function_tag != "phi") {
    if (method == "formula") {
      throw std::invalid_argument(
          "the closed-form period is only available for --function phi");
    }
  }
  const MultiplicativeFunction f = make_builtin(function_tag);
  PeriodReport report;
  if (method == "oracle" || (want_oracle && function_tag != "phi")) {
    report = make_period_report(f, params, budget, false, true);
    if (!report.oracle_period) {
      throw capacity_error("oracle budget exceeded for this grid point");
    }
  } else {
    report = make_period_report(f, params, budget,
                                want_formula && function_tag == "phi",
                                want_oracle);
    if (want_oracle && !report.oracle_period) {
      std::cerr << "note: oracle budget exceeded; reporting formula only\n";
    }
  }
  if (format == "json") {
    std::cout << report_to_json(report) << "\n";
  } else {
    std::cout << reports_to_csv({report});
  }
  return report.agree && !*report.agree ? 1 : 0;
}

int run_local(const ProgressionParams& params, std::int64_t p_flag,
              const std::string& method, const Integer& budget) {
  check_method(method);
  std::vector<Integer> primes;
  if (p_flag > 0) {
    primes.push_back(Integer(p_flag));
  } else {
    primes = candidate_primes(params);
  }
  bool disagreement = false;
  std::cout << "[\n";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::optional<Integer> formula_local;
    std::optional<Integer> oracle_local;
    if (method != "oracle") {
      formula_local = local_period_formula(primes[i], params);
    }
    if (method != "formula") {
      try {
        oracle_local = brute_force_local_period(primes[i], params, budget);
      } catch (const capacity_error&) {
        if (method == "oracle") throw;
        std::cerr << "note: oracle budget exceeded for p = " << primes[i]
                  << "; reporting formula only\n";
      }
    }
    std::string agree = "null";
    if (formula_local && oracle_local) {
      const bool same = *formula_local == *oracle_local;
      agree = same ? "true" : "false";
      disagreement = disagreement || !same;
    }
    std::cout << "  {\"p\": " << primes[i].str()
              << ", \"formula_local\": " << optional_integer_json(formula_local)
              << ", \"oracle_local\": " << optional_integer_json(oracle_local)
              << ", \"agree\": " << agree << "}"
              << (i + 1 < primes.size() ? "," : "") << "\n";
  }
  std::cout << "]\n";
  return disagreement ? 1 : 0;
}

int run_sweep(const SweepConfig& config, const std::string& format) {
  check_format(format);
  const std::vector<PeriodReport> reports = sweep_verify(config);
  if (format == "json") {
    std::cout << reports_to_json(reports);
  } else {
    std::cout << reports_to_csv(reports);
  }
  return all_reports_agree(reports) ? 0 : 1;
}

int run_bound(const ProgressionParams& params, const std::string& n_text) {
  const Integer n = parse_positive(n_text, "--n");
  const BoundCheck result = bound_check(params, n);
  std::cout << "{\"lhs\": \"" << result.lhs.str() << "\", \"rhs\": \""
            << rational_to_string(result.rhs) << "\", \"holds\": "
            << (result.holds ? "true" : "false") << "}\n";
  return result.holds ? 0 : 1;
}

int run_witness(std::int64_t min_bound, std::int64_t search_limit) {
  const WitnessRecord record =
      nonperiodic_witness(Integer(min_bound), Integer(search_limit));
  std::cout << "{\"p\": " << record.p.str() << ", \"m\": " << record.m.str()
            << ", \"n0\": \"" << record.n0.str()
            << "\", \"g_bar_lower_bound\": \""
            << record.g_bar_lower_bound.str() << "\"}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "periodlab: exact periods of multiplicative-function window ratios "
      "over arithmetic progressions"};
  app.require_subcommand(1);

  std::int64_t k = 1, a = 1, b = 0, c = 1;
  std::int64_t p_flag = 0;
  std::int64_t min_bound = 5, search_limit = 1000;
  std::string n_text = "1";
  std::string function_tag = "phi";
  std::string method = "both";
  std::string format = "json";
  std::string budget_text;
  std::string k_range = "1:3", a_range = "1:2", b_range = "0:1",
              c_range = "1:1";
  unsigned jobs = 1;

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--k", k, "window length parameter, k >= 1")->required();
    cmd->add_option("--a", a, "progression slope, a >= 1")->required();
    cmd->add_option("--b", b, "progression offset, b >= 0")->required();
    cmd->add_option("--c", c, "gap between window terms, c >= 1")->required();
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--oracle-budget", budget_text,
                    "largest c*L_k the brute-force oracle accepts "
                    "(default: PERIODLAB_ORACLE_BUDGET or 5000)");
  };

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate the window ratio g(n)");
  add_params(eval_cmd);
  eval_cmd->add_option("--n", n_text, "evaluation point, n >= 1")->required();
  eval_cmd->add_option("--function", function_tag,
                       "phi | sigma:<alpha> | pow:<exponent> | one");

  CLI::App* period_cmd = app.add_subcommand(
      "period", "smallest period of g, by formula and/or oracle");
  add_params(period_cmd);
  period_cmd->add_option("--function", function_tag,
                         "phi | sigma:<alpha> | pow:<exponent> | one");
  period_cmd->add_option("--method", method, "formula | oracle | both");
  period_cmd->add_option("--format", format, "json | csv");
  add_budget(period_cmd);

  CLI::App* local_cmd = app.add_subcommand(
      "local", "local period of v_p(g(n)) for f = phi; all candidate primes "
               "when --p is omitted");
  add_params(local_cmd);
  local_cmd->add_option("--p", p_flag, "prime to localize at");
  local_cmd->add_option("--method", method, "formula | oracle | both");
  add_budget(local_cmd);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "verify formula against oracle over a parameter grid");
  sweep_cmd->add_option("--k", k_range, "k range, LO:HI or a single value");
  sweep_cmd->add_option("--a", a_range, "a range, LO:HI or a single value");
  sweep_cmd->add_option("--b", b_range, "b range, LO:HI or a single value");
  sweep_cmd->add_option("--c", c_range, "c range, LO:HI or a single value");
  sweep_cmd->add_option("--function", function_tag,
                        "phi | sigma:<alpha> | pow:<exponent> | one");
  sweep_cmd->add_option("--format", format, "json | csv");
  sweep_cmd->add_option("--jobs", jobs, "worker threads (default 1)");
  add_budget(sweep_cmd);

  CLI::App* bound_cmd = app.add_subcommand(
      "bound", "check lcm_i phi(term_i) <= prod_i phi(term_i) / g(<n>)");
  add_params(bound_cmd);
  bound_cmd->add_option("--n", n_text, "evaluation point, n >= 1")->required();

  CLI::App* witness_cmd = app.add_subcommand(
      "witness-nonperiodic",
      "find p > min-bound and n0 = m p^2 with p | phi(n0) and p | phi(n0+1)");
  witness_cmd->add_option("--min-bound", min_bound,
                          "witness must exceed this value (>= 2)");
  witness_cmd->add_option("--search-limit", search_limit,
                          "largest multiplier m tried");

  try {
    app.parse(argc, argv);

    const Integer budget = budget_text.empty()
                               ? default_oracle_budget()
                               : parse_positive(budget_text, "--oracle-budget");
    if (eval_cmd->parsed()) {
      return run_eval(ProgressionParams(k, a, b, c), n_text, function_tag);
    }
    if (period_cmd->parsed()) {
      return run_period(ProgressionParams(k, a, b, c), function_tag, method,
                        format, budget);
    }
    if (local_cmd->parsed()) {
      return run_local(ProgressionParams(k, a, b, c), p_flag, method, budget);
    }
    if (sweep_cmd->parsed()) {
      SweepConfig config;
      config.k_range = parse_range(k_range);
      config.a_range = parse_range(a_range);
      config.b_range = parse_range(b_range);
      config.c_range = parse_range(c_range);
      config.oracle_budget = budget;
      config.function_tag = function_tag;
      config.parallelism = jobs;
      return run_sweep(config, format);
    }
    if (bound_cmd->parsed()) {
      return run_bound(ProgressionParams(k, a, b, c), n_text);
    }
    if (witness_cmd->parsed()) {
      return run_witness(min_bound, search_limit);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const not_found_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
