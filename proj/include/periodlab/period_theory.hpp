#pragma once

#include <optional>
#include <utility>

#include "periodlab/g_function.hpp"

// Closed-form smallest period of g for f = phi, its per-prime local
// periods, and independent brute-force oracles certifying both.
//
// g is periodic with period c*L_k (L_k = lcm(1..k)) for every admissible f;
// for f = phi the smallest period has a closed form: c*L_k divided by a
// power-of-two factor eta, by q^{v_q(c L_k)} for every prime q | a', and by
// p^{v_p(L_k)} for the at-most-one exceptional odd prime p.

namespace periodlab {

inline const Integer kDefaultOracleBudget = 5000;

enum class EtaBranch { TwoPowV2Lk, Two, One };

const char* to_string(EtaBranch branch);

// The power of two divided out of c*L_k by the closed-form period.
struct EtaCase {
  Integer value = 1;      // 1, 2, or 2^{v_2(L_k)}
  unsigned exponent = 0;  // v_2(value)
  EtaBranch branch = EtaBranch::One;
};

// Branches, tested in order (they are mutually exclusive; checked):
//   2^{v_2(L_k)}  if 2 does not divide a' and v_2(k+1) >= v_2(L_k) >= 2
//   2             if 2 does not divide a and v_2(c L_k) = 1,
//                 or k = 3, 2 does not divide a and 2 | c,
//                 or k = 3, 2 does not divide a' and 2 | d
//   1             otherwise
EtaCase eta2(std::int64_t k, std::int64_t a, std::int64_t a_prime,
             std::int64_t c, std::int64_t d);

// c*L_k / (eta * prod_{prime q | a'} q^{v_q(c L_k)}); always an exact
// divisor of c*L_k.
Integer q_formula(const ProgressionParams& params);

// The at-most-one odd prime p not dividing a' with v_p(k+1) >= v_p(L_k) >= 1.
// The closed-form period divides out an extra p^{v_p(L_k)} when it exists.
struct ExceptionalPrime {
  std::int64_t p = 0;
  unsigned correction_exponent = 0;  // v_p(L_k)
};

std::optional<ExceptionalPrime> exceptional_odd_prime(
    const ProgressionParams& params);

// The closed-form smallest period of n -> g(n) for f = phi.
Integer smallest_period_phi(const ProgressionParams& params);

// Smallest period of n -> v_p(g(n)) for f = phi, by case analysis on
// (p | c L_k, p | a', p | d). Requires p prime and p <= c L_k (every larger
// prime has local period 1).
Integer local_period_formula(const Integer& p, const ProgressionParams& params);

// Primes that can carry a nontrivial local period: divisors of c*L_k plus
// the prime factors of q - 1 for primes q | c with q not dividing a. Every
// other prime has local period 1.
std::vector<Integer> candidate_primes(const ProgressionParams& params);

// lcm of local_period_formula over the candidate primes; agrees with
// smallest_period_phi.
Integer assemble_from_locals(const ProgressionParams& params);

// g(1), ..., g(c L_k): one full cycle of g. Throws capacity_error when
// c*L_k exceeds the budget.
std::vector<Rational> g_value_cycle(const MultiplicativeFunction& f,
                                    const ProgressionParams& params,
                                    const Integer& budget = kDefaultOracleBudget);

// Given one full cycle of a function whose period is the cycle length,
// returns its smallest period. cycle_length is the factored length.
Integer smallest_period_of_cycle(const std::vector<Rational>& cycle,
                                 const FactoredInteger& cycle_length);
Integer smallest_period_of_cycle(const std::vector<long long>& cycle,
                                 const FactoredInteger& cycle_length);

// Oracle: smallest divisor delta of c*L_k with g(n+delta) = g(n) for all
// n in [1, c L_k]. Independent of every closed-form path above.
Integer brute_force_smallest_period(const MultiplicativeFunction& f,
                                    const ProgressionParams& params,
                                    const Integer& budget = kDefaultOracleBudget);

// Oracle for the local period of v_p(g(n)); f defaults to phi.
Integer brute_force_local_period(const Integer& p,
                                 const ProgressionParams& params,
                                 const Integer& budget = kDefaultOracleBudget);
Integer brute_force_local_period(const Integer& p,
                                 const ProgressionParams& params,
                                 const Integer& budget,
                                 const MultiplicativeFunction& f);

// One grid point of a formula-vs-oracle verification run.
struct PeriodReport {
  ProgressionParams params;
  std::int64_t d = 1;
  std::int64_t a_prime = 1;
  Integer clk;
  EtaCase eta;
  std::optional<std::int64_t> exceptional_prime;
  std::optional<Integer> formula_period;
  std::optional<Integer> oracle_period;
  // prime -> (formula local, oracle local)
  std::optional<std::map<Integer, std::pair<Integer, Integer>>> local_breakdown;
  std::optional<bool> agree;  // set iff both periods are present
};

// with_formula only makes sense for f = phi (no closed form is claimed for
// any other f). An oracle run that exceeds the budget leaves oracle_period
// empty instead of failing.
PeriodReport make_period_report(const MultiplicativeFunction& f,
                                const ProgressionParams& params,
                                const Integer& oracle_budget,
                                bool with_formula, bool with_oracle,
                                bool with_locals = false);

}  // namespace periodlab
