#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact integer/rational arithmetic: factorizations, p-adic valuations,
// lcm machinery and the alternating-min subset expansion. Everything here
// is pure and deterministic; values are immutable once built.

namespace periodlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An enumeration would exceed its configured cap (subset expansions,
// oracle budgets). Callers that can degrade gracefully catch this one.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded search ran out of room without a hit.
class not_found_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked internal invariant failed. Never caused by bad user input.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A positive integer kept as its prime factorization. The empty map is 1.
// Keys are verified prime and exponents are >= 1.
class FactoredInteger {
 public:
  FactoredInteger() = default;
  explicit FactoredInteger(std::map<Integer, unsigned> factors);

  const std::map<Integer, unsigned>& factors() const { return factors_; }
  unsigned exponent_of(const Integer& p) const;
  Integer value() const;
  bool is_one() const { return factors_.empty(); }

  // Product of two factored integers: exponents add.
  FactoredInteger times(const FactoredInteger& other) const;

  bool operator==(const FactoredInteger&) const = default;

 private:
  std::map<Integer, unsigned> factors_;
};

// Deterministic primality: table lookup below 10^6, Miller-Rabin with a
// fixed base set above it.
bool is_prime(const Integer& n);

// All primes below 10^6, ascending. Built once, immutable afterwards.
const std::vector<std::uint32_t>& small_primes();

std::vector<std::int64_t> primes_upto(std::int64_t limit);

// Trial division by small primes, then Miller-Rabin plus Pollard rho
// splitting for any remaining cofactor. Rejects n <= 0.
FactoredInteger factorize(const Integer& n);

// v_p(n): exponent of the prime p in n. Rejects composite p and n = 0.
long long vp(const Integer& p, const Integer& n);
// v_p extended to rationals: vp(num) - vp(den). Rejects x = 0.
long long vp_rational(const Integer& p, const Rational& x);

// lcm(1..k) in factored form; exponent of p is the largest e with p^e <= k.
// k = 0 is accepted and gives 1.
FactoredInteger lcm_upto(std::int64_t k);

Integer lcm_list(const std::vector<Integer>& values);
Integer gcd_list(const std::vector<Integer>& values);

inline constexpr std::size_t kSubsetCap = 20;

// Sum over all nonempty subsets S of (-1)^(|S|+1) * min(S). Equals
// max(values); the identity is what the Hua-style lcm expansion rests on.
long long alternating_min_expansion(const std::vector<long long>& values,
                                    std::size_t cap = kSubsetCap);

std::vector<Integer> divisors_ascending(const FactoredInteger& n);

Integer pow_integer(const Integer& base, unsigned exponent);

// "num/den" in lowest terms; integers print without the "/1".
std::string rational_to_string(const Rational& x);

// Strict decimal integer parse (optional leading '-'); rejects anything else.
Integer parse_integer(const std::string& text);

}  // namespace periodlab
