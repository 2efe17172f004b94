#include "periodlab/g_function.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace periodlab {

namespace {

Integer phi_of_int64(std::int64_t n) {
  static const MultiplicativeFunction phi = euler_phi();
  return numerator(phi.evaluate(Integer(n)));
}

long long count_divisible(const std::vector<Integer>& terms,
                          const Integer& modulus) {
  long long count = 0;
  for (const Integer& t : terms) {
    if (t % modulus == 0) ++count;
  }
  return count;
}

}  // namespace

ProgressionParams::ProgressionParams(std::int64_t k, std::int64_t a,
                                     std::int64_t b, std::int64_t c)
    : k(k), a(a), b(b), c(c) {
  if (k < 1 || a < 1 || b < 0 || c < 1) {
    throw std::invalid_argument(
        "ProgressionParams: need k >= 1, a >= 1, b >= 0, c >= 1");
  }
}

DerivedParams derive_params(const ProgressionParams& params) {
  DerivedParams out;
  out.d = std::gcd(params.a, params.b);
  out.a_prime = params.a / out.d;
  out.b_prime = params.b / out.d;
  out.lk = lcm_upto(params.k);
  out.lk_value = out.lk.value();
  out.clk = factorize(Integer(params.c)).times(out.lk);
  out.clk_value = out.clk.value();
  return out;
}

ProgressionWindow window(const ProgressionParams& params, const Integer& n) {
  if (n < 1) throw std::invalid_argument("window: n must be >= 1");
  const std::int64_t d = std::gcd(params.a, params.b);
  const std::int64_t a_prime = params.a / d;
  const std::int64_t b_prime = params.b / d;

  ProgressionWindow w;
  w.full_terms.reserve(static_cast<std::size_t>(params.k) + 1);
  w.reduced_terms.reserve(static_cast<std::size_t>(params.k) + 1);
  for (std::int64_t i = 0; i <= params.k; ++i) {
    const Integer shifted = n + Integer(i) * params.c;
    const Integer full = params.b + params.a * shifted;
    if (full <= 0) throw invariant_error("window: nonpositive term");
    w.full_terms.push_back(full);
    w.reduced_terms.push_back(b_prime + a_prime * shifted);
  }
  return w;
}

Rational g_eval(const MultiplicativeFunction& f,
                const ProgressionParams& params, const Integer& n) {
  const ProgressionWindow w = window(params, n);
  Rational product = 1;
  std::map<Integer, unsigned> lcm_exponents;
  for (const Integer& term : w.full_terms) {
    const FactoredInteger factored = factorize(term);
    product *= f.evaluate(factored);
    for (const auto& [p, e] : factored.factors()) {
      unsigned& slot = lcm_exponents[p];
      slot = std::max(slot, e);
    }
  }
  return product / f.evaluate(FactoredInteger(std::move(lcm_exponents)));
}

LocalValuationBreakdown g_phi_local_valuation(const Integer& p,
                                              const ProgressionParams& params,
                                              const Integer& n) {
  if (!is_prime(p)) {
    throw std::invalid_argument("g_phi_local_valuation: p must be prime");
  }
  const DerivedParams der = derive_params(params);
  const std::vector<Integer> reduced = window(params, n).reduced_terms;

  LocalValuationBreakdown out;
  out.base = params.k * vp(p, phi_of_int64(der.d));

  const bool p_divides_d = Integer(der.d) % p == 0;
  const unsigned e_start = p_divides_d ? 1 : 2;
  const unsigned e_end = der.clk.exponent_of(p);
  Integer p_power = pow_integer(p, e_start);
  for (unsigned e = e_start; e <= e_end; ++e) {
    out.fe_terms[e] = std::max(0LL, count_divisible(reduced, p_power) - 1);
    p_power *= p;
  }

  for (const auto& [q, unused] : der.clk.factors()) {
    if (Integer(params.a) % q == 0) continue;
    if ((q - 1) % p != 0) continue;
    out.hq_terms[q] =
        std::max(0LL, count_divisible(reduced, q) - 1) * vp(p, Integer(q - 1));
  }

  out.total = out.base;
  for (const auto& [e, v] : out.fe_terms) out.total += v;
  for (const auto& [q, v] : out.hq_terms) out.total += v;
  return out;
}

long long g_phi_valuation_direct(const Integer& p,
                                 const ProgressionParams& params,
                                 const Integer& n) {
  if (!is_prime(p)) {
    throw std::invalid_argument("g_phi_valuation_direct: p must be prime");
  }
  const DerivedParams der = derive_params(params);
  const std::vector<Integer> reduced = window(params, n).reduced_terms;

  std::vector<FactoredInteger> factored;
  factored.reserve(reduced.size());
  for (const Integer& t : reduced) factored.push_back(factorize(t));

  long long total = params.k * vp(p, phi_of_int64(der.d));

  const bool p_divides_d = Integer(der.d) % p == 0;
  long long sum_part = 0;
  long long max_part = 0;
  for (const FactoredInteger& t : factored) {
    const long long v = t.exponent_of(p);
    const long long contribution = p_divides_d ? v : std::max(v - 1, 0LL);
    sum_part += contribution;
    max_part = std::max(max_part, contribution);
  }
  total += sum_part - max_part;

  std::map<Integer, long long> multiplicity;
  for (const FactoredInteger& t : factored) {
    for (const auto& [q, unused] : t.factors()) ++multiplicity[q];
  }
  for (const auto& [q, count] : multiplicity) {
    if (q == p || Integer(der.d) % q == 0 || count < 2) continue;
    total += (count - 1) * vp(p, Integer(q - 1));
  }
  return total;
}

bool check_incongruence(const Integer& p, unsigned e,
                        const ProgressionParams& params, const Integer& m) {
  if (!is_prime(p)) {
    throw std::invalid_argument("check_incongruence: p must be prime");
  }
  if (e < 1) throw std::invalid_argument("check_incongruence: e must be >= 1");
  if (m < 1) throw std::invalid_argument("check_incongruence: m must be >= 1");
  const std::int64_t d = std::gcd(params.a, params.b);
  const std::int64_t a_prime = params.a / d;
  const std::int64_t b_prime = params.b / d;
  if (Integer(a_prime) % p == 0) {
    throw std::invalid_argument(
        "check_incongruence: requires p not dividing a'");
  }
  const Integer term_count = pow_integer(p, e);
  if (term_count > 1'000'000) {
    throw capacity_error("check_incongruence: p^e = " + term_count.str() +
                         " residues is beyond the enumeration cap");
  }
  const Integer modulus =
      pow_integer(p, static_cast<unsigned>(vp(p, Integer(params.c))) + e);
  std::set<Integer> residues;
  for (Integer i = 0; i < term_count; ++i) {
    const Integer term = b_prime + a_prime * (m + i * params.c);
    if (!residues.insert(term % modulus).second) return false;
  }
  return true;
}

}  // namespace periodlab
