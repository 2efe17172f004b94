#include "periodlab/period_theory.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace periodlab {

namespace {

unsigned v2_of_int64(std::int64_t n) {
  return static_cast<unsigned>(
      std::countr_zero(static_cast<unsigned long long>(n)));
}

// floor(log2 k) = v_2(lcm(1..k)) for k >= 1.
unsigned v2_of_lcm_upto(std::int64_t k) {
  return static_cast<unsigned>(
      std::bit_width(static_cast<unsigned long long>(k)) - 1);
}

void remove_exponent(std::map<Integer, unsigned>& exponents, const Integer& p,
                     unsigned amount, const char* what) {
  if (amount == 0) return;
  auto it = exponents.find(p);
  if (it == exponents.end() || it->second < amount) {
    throw invariant_error(std::string(what) + " does not divide c*L_k");
  }
  it->second -= amount;
  if (it->second == 0) exponents.erase(it);
}

Integer materialize(const std::map<Integer, unsigned>& exponents) {
  Integer result = 1;
  for (const auto& [p, e] : exponents) result *= pow_integer(p, e);
  return result;
}

// Exponent map of the closed-form period, kept factored so that huge k
// never forces intermediate big-integer division.
std::map<Integer, unsigned> period_exponents(const ProgressionParams& params,
                                             const DerivedParams& der,
                                             bool with_exceptional_correction) {
  std::map<Integer, unsigned> exponents = der.clk.factors();
  const EtaCase eta =
      eta2(params.k, params.a, der.a_prime, params.c, der.d);
  remove_exponent(exponents, 2, eta.exponent, "eta");
  for (const auto& [q, e] : factorize(Integer(der.a_prime)).factors()) {
    exponents.erase(q);  // q^{v_q(c L_k)} is divided out entirely
  }
  if (with_exceptional_correction) {
    if (const auto ex = exceptional_odd_prime(params)) {
      remove_exponent(exponents, Integer(ex->p), ex->correction_exponent,
                      "exceptional prime power");
    }
  }
  return exponents;
}

template <typename Value>
Integer smallest_cycle_period(const std::vector<Value>& cycle,
                              const FactoredInteger& cycle_length) {
  // If s and t are periods then so is gcd(s, t): pick x, y >= 0 with
  // x s - y t = gcd(s, t); then F(n + gcd) = F(n + gcd + y t) = F(n + x s)
  // = F(n), every shift pointing forward. Hence the smallest period divides
  // every period, in particular the cycle length, so only divisors of the
  // length need checking; and agreement over one full cycle extends
  // everywhere because the cycle length is itself a period.
  const std::size_t length = cycle.size();
  if (length == 0 || Integer(length) != cycle_length.value()) {
    throw std::invalid_argument(
        "smallest_period_of_cycle: cycle length mismatch");
  }
  for (const Integer& divisor : divisors_ascending(cycle_length)) {
    const std::size_t delta = divisor.convert_to<std::size_t>();
    bool is_period = true;
    for (std::size_t i = 0; i < length; ++i) {
      if (cycle[(i + delta) % length] != cycle[i]) {
        is_period = false;
        break;
      }
    }
    if (is_period) return divisor;
  }
  throw invariant_error("smallest_period_of_cycle: full cycle not a period");
}

}  // namespace

const char* to_string(EtaBranch branch) {
  switch (branch) {
    case EtaBranch::TwoPowV2Lk:
      return "2^v2(Lk)";
    case EtaBranch::Two:
      return "2";
    case EtaBranch::One:
      return "1";
  }
  return "?";
}

EtaCase eta2(std::int64_t k, std::int64_t a, std::int64_t a_prime,
             std::int64_t c, std::int64_t d) {
  if (k < 1 || a < 1 || c < 1 || d < 1 || a_prime < 1 || d * a_prime != a) {
    throw std::invalid_argument("eta2: inconsistent (k, a, a', c, d)");
  }
  const unsigned v2_lk = v2_of_lcm_upto(k);
  const unsigned v2_clk = v2_of_int64(c) + v2_lk;
  const unsigned v2_k1 = v2_of_int64(k + 1);

  const bool power_branch = a_prime % 2 != 0 && v2_k1 >= v2_lk && v2_lk >= 2;
  const bool two_branch = (a % 2 != 0 && v2_clk == 1) ||
                          (k == 3 && a % 2 != 0 && c % 2 == 0) ||
                          (k == 3 && a_prime % 2 != 0 && d % 2 == 0);
  if (power_branch && two_branch) {
    throw invariant_error("eta2: branches fired together");
  }

  EtaCase out;
  if (power_branch) {
    out.exponent = v2_lk;
    out.branch = EtaBranch::TwoPowV2Lk;
  } else if (two_branch) {
    out.exponent = 1;
    out.branch = EtaBranch::Two;
  }
  out.value = Integer(1) << out.exponent;
  return out;
}

Integer q_formula(const ProgressionParams& params) {
  const DerivedParams der = derive_params(params);
  return materialize(period_exponents(params, der, false));
}

std::optional<ExceptionalPrime> exceptional_odd_prime(
    const ProgressionParams& params) {
  const std::int64_t k = params.k;
  const std::int64_t a_prime = params.a / std::gcd(params.a, params.b);

  std::vector<std::pair<std::int64_t, unsigned>> qualifying;
  for (std::int64_t p : primes_upto(k)) {
    unsigned v_lk = 1;  // p <= k, so v_p(L_k) >= 1
    std::int64_t power = p;
    while (power <= k / p) {
      power *= p;
      ++v_lk;
    }
    std::int64_t m = k + 1;
    unsigned v_k1 = 0;
    while (m % p == 0) {
      m /= p;
      ++v_k1;
    }
    if (v_k1 >= v_lk) qualifying.emplace_back(p, v_lk);
  }
  if (qualifying.size() > 1) {
    throw invariant_error(
        "exceptional_odd_prime: two primes p <= k with v_p(k+1) >= v_p(L_k)");
  }
  if (qualifying.empty()) return std::nullopt;
  const auto [p, v_lk] = qualifying.front();
  if (p == 2 || a_prime % p == 0) return std::nullopt;
  return ExceptionalPrime{p, v_lk};
}

Integer smallest_period_phi(const ProgressionParams& params) {
  const DerivedParams der = derive_params(params);
  return materialize(period_exponents(params, der, true));
}

Integer local_period_formula(const Integer& p,
                             const ProgressionParams& params) {
  if (!is_prime(p)) {
    throw std::invalid_argument("local_period_formula: p must be prime");
  }
  const DerivedParams der = derive_params(params);
  if (p > der.clk_value) {
    throw std::invalid_argument(
        "local_period_formula: p exceeds c*L_k (local period is trivially 1)");
  }
  const Integer a(params.a);
  const Integer c(params.c);
  const Integer k_plus_1(params.k + 1);

  // Primes q | L_k with q coprime to a and c, q = 1 (mod p), and q not
  // dividing k+1.
  Integer lk_product = 1;
  for (const auto& [q, e] : der.lk.factors()) {
    if (a % q != 0 && c % q != 0 && (q - 1) % p == 0 && k_plus_1 % q != 0) {
      lk_product *= q;
    }
  }
  // Primes q | c with q coprime to a, q = 1 (mod p).
  Integer c_product = 1;
  for (const auto& [q, e] : factorize(c).factors()) {
    if (a % q != 0 && (q - 1) % p == 0) c_product *= q;
  }

  const unsigned v_clk = der.clk.exponent_of(p);
  if (v_clk == 0) {
    // p <= c L_k but p does not divide it; only primes q | c can matter.
    return c_product;
  }
  if (Integer(der.a_prime) % p == 0) {
    // No reduced term is ever divisible by p.
    return lk_product * c_product;
  }

  const unsigned v_lk = der.lk.exponent_of(p);
  const unsigned v_c = static_cast<unsigned>(vp(p, c));
  const unsigned v_k1 = static_cast<unsigned>(vp(p, k_plus_1));
  unsigned p_exponent;
  if (Integer(der.d) % p != 0) {
    if (v_clk == 1) {
      p_exponent = 0;
    } else {
      p_exponent = v_k1 >= v_lk ? v_c : v_clk;
    }
  } else {
    p_exponent = v_k1 >= v_lk ? v_c : v_clk;
  }
  return pow_integer(p, p_exponent) * lk_product * c_product;
}

std::vector<Integer> candidate_primes(const ProgressionParams& params) {
  const DerivedParams der = derive_params(params);
  std::set<Integer> candidates;
  for (const auto& [p, e] : der.clk.factors()) candidates.insert(p);
  for (const auto& [q, e] : factorize(Integer(params.c)).factors()) {
    if (Integer(params.a) % q == 0) continue;
    for (const auto& [r, re] : factorize(q - 1).factors()) {
      candidates.insert(r);
    }
  }
  return {candidates.begin(), candidates.end()};
}

Integer assemble_from_locals(const ProgressionParams& params) {
  Integer acc = 1;
  for (const Integer& p : candidate_primes(params)) {
    acc = boost::multiprecision::lcm(acc, local_period_formula(p, params));
  }
  return acc;
}

std::vector<Rational> g_value_cycle(const MultiplicativeFunction& f,
                                    const ProgressionParams& params,
                                    const Integer& budget) {
  const DerivedParams der = derive_params(params);
  if (der.clk_value > budget) {
    throw capacity_error("oracle budget exceeded: c*L_k = " +
                         der.clk_value.str() + " > " + budget.str());
  }
  const std::size_t length = der.clk_value.convert_to<std::size_t>();
  std::vector<Rational> cycle;
  cycle.reserve(length);
  for (std::size_t n = 1; n <= length; ++n) {
    cycle.push_back(g_eval(f, params, Integer(n)));
  }
  return cycle;
}

Integer smallest_period_of_cycle(const std::vector<Rational>& cycle,
                                 const FactoredInteger& cycle_length) {
  return smallest_cycle_period(cycle, cycle_length);
}

Integer smallest_period_of_cycle(const std::vector<long long>& cycle,
                                 const FactoredInteger& cycle_length) {
  return smallest_cycle_period(cycle, cycle_length);
}

Integer brute_force_smallest_period(const MultiplicativeFunction& f,
                                    const ProgressionParams& params,
                                    const Integer& budget) {
  const DerivedParams der = derive_params(params);
  return smallest_period_of_cycle(g_value_cycle(f, params, budget), der.clk);
}

Integer brute_force_local_period(const Integer& p,
                                 const ProgressionParams& params,
                                 const Integer& budget) {
  return brute_force_local_period(p, params, budget, euler_phi());
}

Integer brute_force_local_period(const Integer& p,
                                 const ProgressionParams& params,
                                 const Integer& budget,
                                 const MultiplicativeFunction& f) {
  if (!is_prime(p)) {
    throw std::invalid_argument("brute_force_local_period: p must be prime");
  }
  const DerivedParams der = derive_params(params);
  const std::vector<Rational> values = g_value_cycle(f, params, budget);
  std::vector<long long> valuations;
  valuations.reserve(values.size());
  for (const Rational& v : values) valuations.push_back(vp_rational(p, v));
  return smallest_period_of_cycle(valuations, der.clk);
}

PeriodReport make_period_report(const MultiplicativeFunction& f,
                                const ProgressionParams& params,
                                const Integer& oracle_budget,
                                bool with_formula, bool with_oracle,
                                bool with_locals) {
  const DerivedParams der = derive_params(params);
  PeriodReport report;
  report.params = params;
  report.d = der.d;
  report.a_prime = der.a_prime;
  report.clk = der.clk_value;
  report.eta = eta2(params.k, params.a, der.a_prime, params.c, der.d);
  if (const auto ex = exceptional_odd_prime(params)) {
    report.exceptional_prime = ex->p;
  }
  if (with_formula) report.formula_period = smallest_period_phi(params);
  if (with_oracle) {
    try {
      const std::vector<Rational> cycle = g_value_cycle(f, params, oracle_budget);
      report.oracle_period = smallest_period_of_cycle(cycle, der.clk);
      if (with_locals) {
        std::map<Integer, std::pair<Integer, Integer>> locals;
        for (const Integer& p : candidate_primes(params)) {
          std::vector<long long> valuations;
          valuations.reserve(cycle.size());
          for (const Rational& v : cycle) valuations.push_back(vp_rational(p, v));
          locals[p] = {local_period_formula(p, params),
                       smallest_period_of_cycle(valuations, der.clk)};
        }
        report.local_breakdown = std::move(locals);
      }
    } catch (const capacity_error&) {
      // Budget overruns downgrade the point to formula-only.
    }
  }
  if (report.formula_period && report.oracle_period) {
    report.agree = *report.formula_period == *report.oracle_period;
  }
  return report;
}

}  // namespace periodlab
