#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "periodlab/multiplicative.hpp"

// The window ratio g(n) = prod_i f(b + a(n+ic)) / f(lcm_i {b + a(n+ic)})
// over the k+1 terms b + a(n+ic), i = 0..k, together with the p-adic
// decomposition of its value when f is the Euler phi function.

namespace periodlab {

struct ProgressionParams {
  std::int64_t k = 1;  // window has k+1 terms
  std::int64_t a = 1;  // progression slope, >= 1
  std::int64_t b = 0;  // progression offset, >= 0
  std::int64_t c = 1;  // gap between consecutive window terms, >= 1

  ProgressionParams() = default;
  ProgressionParams(std::int64_t k, std::int64_t a, std::int64_t b,
                    std::int64_t c);
};

struct DerivedParams {
  std::int64_t d = 1;        // gcd(a, b), with gcd(a, 0) = a
  std::int64_t a_prime = 1;  // a / d
  std::int64_t b_prime = 0;  // b / d; gcd(a_prime, b_prime) = 1
  FactoredInteger lk;        // lcm(1..k)
  FactoredInteger clk;       // c * lcm(1..k)
  Integer lk_value;
  Integer clk_value;
};

DerivedParams derive_params(const ProgressionParams& params);

struct ProgressionWindow {
  std::vector<Integer> full_terms;     // b + a(n+ic)
  std::vector<Integer> reduced_terms;  // b' + a'(n+ic); full = d * reduced
};

ProgressionWindow window(const ProgressionParams& params, const Integer& n);

Rational g_eval(const MultiplicativeFunction& f,
                const ProgressionParams& params, const Integer& n);

// v_p(g(n)) for f = phi, split into its closed-form pieces:
//
//   total = k v_p(phi(d)) + sum_e f_e(n) + sum_q h_q(n)
//
// where f_e(n) = max(0, #{reduced terms divisible by p^e} - 1) for e up to
// v_p(c L_k) (starting at e = 2 when p does not divide d, at e = 1 when it
// does), and h_q(n) = max(0, #{reduced terms divisible by q} - 1) v_p(q-1)
// over primes q | c L_k with q not dividing a and q = 1 (mod p).
struct LocalValuationBreakdown {
  long long base = 0;                    // k v_p(phi(d))
  std::map<unsigned, long long> fe_terms;
  std::map<Integer, long long> hq_terms;
  long long total = 0;
};

LocalValuationBreakdown g_phi_local_valuation(const Integer& p,
                                              const ProgressionParams& params,
                                              const Integer& n);

// Same valuation computed the long way, straight from the definition split
// on whether p divides d. Kept as an independent cross-check of the
// truncated form above.
long long g_phi_valuation_direct(const Integer& p,
                                 const ProgressionParams& params,
                                 const Integer& n);

// True iff the p^e consecutive terms b' + a'(m+ic), i = 0..p^e - 1, are
// pairwise incongruent mod p^(v_p(c)+e). Requires p not dividing a', and
// always holds under that hypothesis.
bool check_incongruence(const Integer& p, unsigned e,
                        const ProgressionParams& params, const Integer& m);

}  // namespace periodlab
