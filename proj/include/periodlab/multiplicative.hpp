#pragma once

#include <functional>
#include <string>
#include <vector>

#include "periodlab/exact_arith.hpp"

namespace periodlab {

// A multiplicative function given by its values on prime powers. The value
// at 1 is fixed to 1 and evaluation multiplies the rule over the prime
// factorization, so multiplicativity holds structurally rather than by
// promise. Rules must never return 0; evaluation enforces that.
class MultiplicativeFunction {
 public:
  using PrimePowerRule = std::function<Rational(const Integer& p, unsigned e)>;

  MultiplicativeFunction(std::string name, PrimePowerRule rule);

  const std::string& name() const { return name_; }

  // f(p^e); e = 0 gives 1. Throws invariant_error if the rule returns 0.
  Rational prime_power_value(const Integer& p, unsigned e) const;

  Rational evaluate(const FactoredInteger& n) const;
  Rational evaluate(const Integer& n) const;

 private:
  std::string name_;
  PrimePowerRule rule_;
};

// Euler phi: (p, e) -> p^(e-1) (p - 1).
MultiplicativeFunction euler_phi();
// sigma_alpha: (p, e) -> 1 + p^alpha + ... + p^(e alpha), alpha >= 0.
MultiplicativeFunction divisor_power_sum(unsigned alpha);
// n -> n^exponent, any integer exponent (negative values give rationals).
MultiplicativeFunction integer_power(long long exponent);
MultiplicativeFunction constant_one();

// Tags used by the CLI: "phi", "sigma:<alpha>", "pow:<exponent>", "one".
MultiplicativeFunction make_builtin(const std::string& tag);

// f(lcm(values)) evaluated on the factored lcm.
Rational f_of_lcm_direct(const MultiplicativeFunction& f,
                         const std::vector<Integer>& values);

// f(lcm(values)) via the inclusion-exclusion expansion over subset gcds:
//   prod f(a_i) * prod_{|S| >= 2} f(gcd(S))^((-1)^(|S|-1)).
// Enumerates 2^n subsets, so the list length is capped.
Rational f_of_lcm_hua(const MultiplicativeFunction& f,
                      const std::vector<Integer>& values,
                      std::size_t cap = kSubsetCap);

}  // namespace periodlab
