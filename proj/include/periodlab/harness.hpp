#pragma once

#include <string>
#include <vector>

#include "periodlab/period_theory.hpp"

// Sweep verification over parameter grids, the lcm-of-phi bound check, the
// non-periodicity witness search, and deterministic JSON/CSV report output.

namespace periodlab {

// Default 5000, overridable through the PERIODLAB_ORACLE_BUDGET env var.
Integer default_oracle_budget();

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct SweepConfig {
  Range k_range{1, 3};
  Range a_range{1, 2};
  Range b_range{0, 1};
  Range c_range{1, 1};
  Integer oracle_budget = default_oracle_budget();
  std::string function_tag = "phi";
  unsigned parallelism = 1;
};

// One report per grid point, sorted by (k, a, b, c). Formula and oracle are
// both attempted (the formula only for "phi"); grid points whose c*L_k
// exceeds the budget come back oracle-less rather than failing. Grid points
// are independent work items; the output order never depends on scheduling.
std::vector<PeriodReport> sweep_verify(const SweepConfig& config);

// False iff some report has both periods and they differ.
bool all_reports_agree(const std::vector<PeriodReport>& reports);

std::string report_to_json(const PeriodReport& report);
std::string reports_to_json(const std::vector<PeriodReport>& reports);
std::string reports_to_csv(const std::vector<PeriodReport>& reports);

// lcm_i phi(b + a(n+ic))  <=  prod_i phi(b + a(n+ic)) / g(<n>), where <n>
// is the representative of n in [1, P] for the smallest period P of g.
struct BoundCheck {
  Integer lhs;
  Rational rhs;
  bool holds = false;
};

BoundCheck bound_check(const ProgressionParams& params, const Integer& n);

// Witness that prod_i phi(n+i) / lcm_i phi(n+i) is unbounded: a prime
// p > min_bound and m with m p^2 + 1 prime make p divide both phi(n0) and
// phi(n0 + 1) at n0 = m p^2.
struct WitnessRecord {
  Integer p;
  Integer m;
  Integer n0;                  // m * p^2; n0 + 1 is prime
  Integer g_bar_lower_bound;   // gcd(phi(n0), phi(n0+1)) >= p
};

WitnessRecord nonperiodic_witness(const Integer& min_bound,
                                  const Integer& search_limit);

}  // namespace periodlab
