#include "periodlab/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace periodlab {

namespace {

using ordered_json = nlohmann::ordered_json;

void require_range(const Range& r, const char* name, std::int64_t min_lo) {
  if (r.lo > r.hi) {
    throw std::invalid_argument(std::string("sweep: empty ") + name +
                                " range");
  }
  if (r.lo < min_lo) {
    throw std::invalid_argument(std::string("sweep: ") + name +
                                " range starts below " +
                                std::to_string(min_lo));
  }
}

ordered_json report_to_json_object(const PeriodReport& r) {
  ordered_json j;
  j["k"] = r.params.k;
  j["a"] = r.params.a;
  j["b"] = r.params.b;
  j["c"] = r.params.c;
  j["d"] = r.d;
  j["a_prime"] = r.a_prime;
  j["cLk"] = r.clk.str();
  j["eta"] = r.eta.value.convert_to<std::int64_t>();
  j["eta_case"] = to_string(r.eta.branch);
  if (r.exceptional_prime) {
    j["exceptional_prime"] = *r.exceptional_prime;
  } else {
    j["exceptional_prime"] = nullptr;
  }
  if (r.formula_period) {
    j["formula_period"] = r.formula_period->str();
  } else {
    j["formula_period"] = nullptr;
  }
  if (r.oracle_period) {
    j["oracle_period"] = r.oracle_period->str();
  } else {
    j["oracle_period"] = nullptr;
  }
  if (r.agree) {
    j["agree"] = *r.agree;
  } else {
    j["agree"] = nullptr;
  }
  return j;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char ch : raw) {
    quoted += ch;
    if (ch == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

Integer phi_value(const Integer& n) {
  static const MultiplicativeFunction phi = euler_phi();
  return numerator(phi.evaluate(n));
}

}  // namespace

Integer default_oracle_budget() {
  if (const char* env = std::getenv("PERIODLAB_ORACLE_BUDGET")) {
    const Integer value = parse_integer(env);
    if (value < 1) {
      throw std::invalid_argument(
          "PERIODLAB_ORACLE_BUDGET must be a positive integer");
    }
    return value;
  }
  return 5000;
}

std::vector<PeriodReport> sweep_verify(const SweepConfig& config) {
  require_range(config.k_range, "k", 1);
  require_range(config.a_range, "a", 1);
  require_range(config.b_range, "b", 0);
  require_range(config.c_range, "c", 1);
  if (config.parallelism < 1) {
    throw std::invalid_argument("sweep: parallelism must be >= 1");
  }
  if (config.oracle_budget < 1) {
    throw std::invalid_argument("sweep: oracle budget must be >= 1");
  }
  const MultiplicativeFunction f = make_builtin(config.function_tag);
  const bool with_formula = config.function_tag == "phi";

  std::vector<ProgressionParams> grid;
  for (std::int64_t k = config.k_range.lo; k <= config.k_range.hi; ++k) {
    for (std::int64_t a = config.a_range.lo; a <= config.a_range.hi; ++a) {
      for (std::int64_t b = config.b_range.lo; b <= config.b_range.hi; ++b) {
        for (std::int64_t c = config.c_range.lo; c <= config.c_range.hi; ++c) {
          grid.emplace_back(k, a, b, c);
        }
      }
    }
  }

  std::vector<PeriodReport> reports(grid.size());
  const unsigned jobs = static_cast<unsigned>(
      std::min<std::size_t>(config.parallelism, grid.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      reports[i] = make_period_report(f, grid[i], config.oracle_budget,
                                      with_formula, true);
    }
    return reports;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < grid.size();
           i = next.fetch_add(1)) {
        reports[i] = make_period_report(f, grid[i], config.oracle_budget,
                                        with_formula, true);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return reports;
}

bool all_reports_agree(const std::vector<PeriodReport>& reports) {
  for (const PeriodReport& r : reports) {
    if (r.agree && !*r.agree) return false;
  }
  return true;
}

std::string report_to_json(const PeriodReport& report) {
  return report_to_json_object(report).dump();
}

std::string reports_to_json(const std::vector<PeriodReport>& reports) {
  ordered_json array = ordered_json::array();
  for (const PeriodReport& r : reports) array.push_back(report_to_json_object(r));
  return array.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<PeriodReport>& reports) {
  std::string out =
      "k,a,b,c,d,a_prime,cLk,eta,eta_case,exceptional_prime,"
      "formula_period,oracle_period,agree\n";
  for (const PeriodReport& r : reports) {
    std::vector<std::string> fields{
        std::to_string(r.params.k),
        std::to_string(r.params.a),
        std::to_string(r.params.b),
        std::to_string(r.params.c),
        std::to_string(r.d),
        std::to_string(r.a_prime),
        r.clk.str(),
        r.eta.value.str(),
        to_string(r.eta.branch),
        r.exceptional_prime ? std::to_string(*r.exceptional_prime) : "",
        r.formula_period ? r.formula_period->str() : "",
        r.oracle_period ? r.oracle_period->str() : "",
        r.agree ? (*r.agree ? "true" : "false") : "",
    };
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_field(fields[i]);
    }
    out += '\n';
  }
  return out;
}

BoundCheck bound_check(const ProgressionParams& params, const Integer& n) {
  if (n < 1) throw std::invalid_argument("bound_check: n must be >= 1");
  const ProgressionWindow w = window(params, n);

  std::vector<Integer> phi_terms;
  phi_terms.reserve(w.full_terms.size());
  Rational product = 1;
  for (const Integer& term : w.full_terms) {
    phi_terms.push_back(phi_value(term));
    product *= phi_terms.back();
  }

  BoundCheck out;
  out.lhs = lcm_list(phi_terms);
  const Integer period = smallest_period_phi(params);
  const Integer representative = (n - 1) % period + 1;
  out.rhs = product / g_eval(euler_phi(), params, representative);
  out.holds = Rational(out.lhs) <= out.rhs;
  return out;
}

WitnessRecord nonperiodic_witness(const Integer& min_bound,
                                  const Integer& search_limit) {
  if (min_bound < 2) {
    throw std::invalid_argument("nonperiodic_witness: min_bound must be >= 2");
  }
  if (search_limit < 1) {
    throw std::invalid_argument(
        "nonperiodic_witness: search_limit must be >= 1");
  }
  Integer p = min_bound + 1;
  while (!is_prime(p)) ++p;

  const Integer p_squared = p * p;
  for (Integer m = 1; m <= search_limit; ++m) {
    const Integer candidate = m * p_squared + 1;
    if (!is_prime(candidate)) continue;
    const Integer n0 = candidate - 1;
    // Verify the record's claims from scratch instead of trusting the
    // construction that produced it.
    const Integer phi0 = phi_value(n0);
    const Integer phi1 = phi_value(n0 + 1);
    if (phi0 % p != 0 || phi1 % p != 0) {
      throw invariant_error("nonperiodic_witness: divisibility check failed");
    }
    const Integer lower_bound = boost::multiprecision::gcd(phi0, phi1);
    if (lower_bound < p) {
      throw invariant_error("nonperiodic_witness: bound fell below p");
    }
    return WitnessRecord{p, m, n0, lower_bound};
  }
  throw not_found_error("nonperiodic_witness: no m <= " + search_limit.str() +
                        " with m*p^2 + 1 prime; raise the search limit");
}

}  // namespace periodlab
