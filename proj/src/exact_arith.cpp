#include "periodlab/exact_arith.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace periodlab {

namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

std::vector<std::uint32_t> build_small_primes() {
  std::vector<bool> composite(kSieveLimit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= kSieveLimit; j += i) {
      composite[static_cast<std::size_t>(j)] = true;
    }
  }
  return primes;
}

bool miller_rabin_composite_witness(const Integer& n, const Integer& base,
                                    const Integer& odd_part, int two_exp) {
  Integer x = boost::multiprecision::powm(base, odd_part, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < two_exp; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

// Classic rho with f(x) = x^2 + c; deterministic because c walks 1, 2, ...
// Only ever called on odd composites with no prime factor below the trial
// division bound.
Integer pollard_rho(const Integer& n) {
  for (Integer c = 1; c <= 64; ++c) {
    Integer x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = boost::multiprecision::gcd(x < y ? y - x : x - y, n);
    }
    if (d != n) return d;
  }
  throw invariant_error("pollard_rho: failed to split a composite");
}

void factor_rough_part(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer d = pollard_rho(n);
  factor_rough_part(d, out);
  factor_rough_part(n / d, out);
}

void factorize_u64(std::uint64_t n, std::map<Integer, unsigned>& out) {
  for (std::uint32_t p : small_primes()) {
    if (std::uint64_t{p} * p > n) break;
    if (n % p == 0) {
      unsigned e = 0;
      do {
        n /= p;
        ++e;
      } while (n % p == 0);
      out[Integer(p)] += e;
    }
  }
  if (n > 1) {
    // No factor below 10^6 remains, so n is prime whenever n < 10^12.
    if (n < 1'000'000'000'000ULL || is_prime(Integer(n))) {
      out[Integer(n)] += 1;
    } else {
      factor_rough_part(Integer(n), out);
    }
  }
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = build_small_primes();
  return primes;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n <= kSieveLimit) {
    const auto& table = small_primes();
    return std::binary_search(table.begin(), table.end(),
                              n.convert_to<std::uint32_t>());
  }
  static constexpr int kBases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                   37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                   83, 89, 97};
  for (int b : kBases) {
    if (n % b == 0) return false;
  }
  Integer odd_part = n - 1;
  int two_exp = 0;
  while (odd_part % 2 == 0) {
    odd_part >>= 1;
    ++two_exp;
  }
  // The first twelve bases are a proven witness set for n < 3.3 * 10^24;
  // the rest only matter for inputs far beyond desk scale.
  for (int b : kBases) {
    if (miller_rabin_composite_witness(n, Integer(b), odd_part, two_exp)) {
      return false;
    }
  }
  return true;
}

std::vector<std::int64_t> primes_upto(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  if (limit <= kSieveLimit) {
    for (std::uint32_t p : small_primes()) {
      if (static_cast<std::int64_t>(p) > limit) break;
      out.push_back(p);
    }
    return out;
  }
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j >= 0 && j <= limit; j += i) {
      composite[static_cast<std::size_t>(j)] = true;
    }
  }
  return out;
}

FactoredInteger::FactoredInteger(std::map<Integer, unsigned> factors)
    : factors_(std::move(factors)) {
  for (const auto& [p, e] : factors_) {
    if (e == 0) throw std::invalid_argument("FactoredInteger: zero exponent");
    if (!is_prime(p)) {
      throw std::invalid_argument("FactoredInteger: key " + p.str() +
                                  " is not prime");
    }
  }
}

unsigned FactoredInteger::exponent_of(const Integer& p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

Integer FactoredInteger::value() const {
  Integer result = 1;
  for (const auto& [p, e] : factors_) result *= pow_integer(p, e);
  return result;
}

FactoredInteger FactoredInteger::times(const FactoredInteger& other) const {
  std::map<Integer, unsigned> merged = factors_;
  for (const auto& [p, e] : other.factors_) merged[p] += e;
  return FactoredInteger(std::move(merged));
}

FactoredInteger factorize(const Integer& n) {
  if (n < 1) {
    throw std::invalid_argument("factorize: n must be a positive integer");
  }
  std::map<Integer, unsigned> out;
  if (n == 1) return FactoredInteger{};
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    factorize_u64(n.convert_to<std::uint64_t>(), out);
    return FactoredInteger(std::move(out));
  }
  Integer rest = n;
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > rest) break;
    if (rest % p == 0) {
      unsigned e = 0;
      do {
        rest /= p;
        ++e;
      } while (rest % p == 0);
      out[Integer(p)] += e;
    }
  }
  factor_rough_part(rest, out);
  return FactoredInteger(std::move(out));
}

long long vp(const Integer& p, const Integer& n) {
  if (!is_prime(p)) throw std::invalid_argument("vp: p must be prime");
  if (n < 1) throw std::invalid_argument("vp: n must be a positive integer");
  long long count = 0;
  Integer m = n;
  while (m % p == 0) {
    m /= p;
    ++count;
  }
  return count;
}

long long vp_rational(const Integer& p, const Rational& x) {
  if (x == 0) throw std::invalid_argument("vp: x must be nonzero");
  const Integer num = boost::multiprecision::abs(numerator(x));
  return vp(p, num) - vp(p, denominator(x));
}

FactoredInteger lcm_upto(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("lcm_upto: k must be nonnegative");
  std::map<Integer, unsigned> out;
  for (std::int64_t p : primes_upto(k)) {
    unsigned e = 1;
    std::int64_t power = p;
    while (power <= k / p) {
      power *= p;
      ++e;
    }
    out[Integer(p)] = e;
  }
  return FactoredInteger(std::move(out));
}

Integer lcm_list(const std::vector<Integer>& values) {
  if (values.empty()) throw std::invalid_argument("lcm_list: empty list");
  Integer acc = 1;
  for (const Integer& v : values) {
    if (v < 1) throw std::invalid_argument("lcm_list: values must be >= 1");
    acc = boost::multiprecision::lcm(acc, v);
  }
  return acc;
}

Integer gcd_list(const std::vector<Integer>& values) {
  if (values.empty()) throw std::invalid_argument("gcd_list: empty list");
  Integer acc = 0;
  for (const Integer& v : values) {
    if (v < 1) throw std::invalid_argument("gcd_list: values must be >= 1");
    acc = boost::multiprecision::gcd(acc, v);
  }
  return acc;
}

long long alternating_min_expansion(const std::vector<long long>& values,
                                    std::size_t cap) {
  if (values.empty()) {
    throw std::invalid_argument("alternating_min_expansion: empty multiset");
  }
  for (long long v : values) {
    if (v < 0) {
      throw std::invalid_argument(
          "alternating_min_expansion: values must be nonnegative");
    }
  }
  if (values.size() > cap) {
    throw capacity_error("alternating_min_expansion: " +
                         std::to_string(values.size()) +
                         " values exceed the subset cap of " +
                         std::to_string(cap));
  }
  const std::size_t n = values.size();
  const std::size_t full = std::size_t{1} << n;
  // mins[mask] = min over the subset encoded by mask.
  std::vector<long long> mins(full, 0);
  long long total = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    mins[mask] = rest == 0 ? values[low] : std::min(mins[rest], values[low]);
    total += (std::popcount(mask) % 2 == 1) ? mins[mask] : -mins[mask];
  }
  return total;
}

std::vector<Integer> divisors_ascending(const FactoredInteger& n) {
  std::vector<Integer> divisors{1};
  for (const auto& [p, e] : n.factors()) {
    const std::size_t base_count = divisors.size();
    Integer power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base_count; ++j) {
        divisors.push_back(divisors[j] * power);
      }
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

Integer pow_integer(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

std::string rational_to_string(const Rational& x) {
  const Integer num = numerator(x);
  const Integer den = denominator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start) {
    throw std::invalid_argument("parse_integer: empty input");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("parse_integer: '" + text +
                                  "' is not a decimal integer");
    }
  }
  return Integer(text);
}

}  // namespace periodlab
