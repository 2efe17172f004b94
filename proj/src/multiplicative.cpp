#include "periodlab/multiplicative.hpp"

#include <bit>
#include <charconv>

namespace periodlab {

namespace {

constexpr long long kMaxPowerExponent = 1 << 20;

long long parse_suffix_integer(const std::string& tag, std::size_t offset) {
  const std::string body = tag.substr(offset);
  const Integer parsed = parse_integer(body);  // throws on junk like "1.5"
  if (parsed > kMaxPowerExponent || parsed < -kMaxPowerExponent) {
    throw std::invalid_argument("make_builtin: exponent out of range in '" +
                                tag + "'");
  }
  return parsed.convert_to<long long>();
}

}  // namespace

MultiplicativeFunction::MultiplicativeFunction(std::string name,
                                               PrimePowerRule rule)
    : name_(std::move(name)), rule_(std::move(rule)) {
  if (!rule_) {
    throw std::invalid_argument("MultiplicativeFunction: missing rule");
  }
}

Rational MultiplicativeFunction::prime_power_value(const Integer& p,
                                                   unsigned e) const {
  if (e == 0) return 1;
  Rational v = rule_(p, e);
  if (v == 0) {
    throw invariant_error("multiplicative function '" + name_ +
                          "' vanished at " + p.str() + "^" +
                          std::to_string(e));
  }
  return v;
}

Rational MultiplicativeFunction::evaluate(const FactoredInteger& n) const {
  Rational result = 1;
  for (const auto& [p, e] : n.factors()) result *= prime_power_value(p, e);
  return result;
}

Rational MultiplicativeFunction::evaluate(const Integer& n) const {
  if (n < 1) {
    throw std::invalid_argument(
        "multiplicative functions are defined on positive integers");
  }
  return evaluate(factorize(n));
}

MultiplicativeFunction euler_phi() {
  return {"phi", [](const Integer& p, unsigned e) -> Rational {
            return pow_integer(p, e - 1) * (p - 1);
          }};
}

MultiplicativeFunction divisor_power_sum(unsigned alpha) {
  return {"sigma:" + std::to_string(alpha),
          [alpha](const Integer& p, unsigned e) -> Rational {
            Integer sum = 0;
            Integer term = 1;
            const Integer step = pow_integer(p, alpha);
            for (unsigned j = 0; j <= e; ++j) {
              sum += term;
              term *= step;
            }
            return sum;
          }};
}

MultiplicativeFunction integer_power(long long exponent) {
  if (exponent > kMaxPowerExponent || exponent < -kMaxPowerExponent) {
    throw std::invalid_argument("integer_power: exponent out of range");
  }
  return {"pow:" + std::to_string(exponent),
          [exponent](const Integer& p, unsigned e) -> Rational {
            const unsigned long long mag =
                static_cast<unsigned long long>(e) *
                static_cast<unsigned long long>(
                    exponent < 0 ? -exponent : exponent);
            const Integer power = pow_integer(p, static_cast<unsigned>(mag));
            return exponent >= 0 ? Rational(power) : Rational(1, power);
          }};
}

MultiplicativeFunction constant_one() {
  return {"one", [](const Integer&, unsigned) -> Rational { return 1; }};
}

MultiplicativeFunction make_builtin(const std::string& tag) {
  if (tag == "phi") return euler_phi();
  if (tag == "one") return constant_one();
  if (tag.rfind("sigma:", 0) == 0) {
    const long long alpha = parse_suffix_integer(tag, 6);
    if (alpha < 0) {
      throw std::invalid_argument("make_builtin: sigma exponent must be >= 0");
    }
    return divisor_power_sum(static_cast<unsigned>(alpha));
  }
  if (tag.rfind("pow:", 0) == 0) {
    return integer_power(parse_suffix_integer(tag, 4));
  }
  throw std::invalid_argument("make_builtin: unknown function tag '" + tag +
                              "'");
}

Rational f_of_lcm_direct(const MultiplicativeFunction& f,
                         const std::vector<Integer>& values) {
  if (values.empty()) {
    throw std::invalid_argument("f_of_lcm_direct: empty list");
  }
  std::map<Integer, unsigned> lcm_exponents;
  for (const Integer& v : values) {
    for (const auto& [p, e] : factorize(v).factors()) {
      unsigned& slot = lcm_exponents[p];
      slot = std::max(slot, e);
    }
  }
  return f.evaluate(FactoredInteger(std::move(lcm_exponents)));
}

Rational f_of_lcm_hua(const MultiplicativeFunction& f,
                      const std::vector<Integer>& values, std::size_t cap) {
  if (values.empty()) throw std::invalid_argument("f_of_lcm_hua: empty list");
  if (values.size() > cap) {
    throw capacity_error("f_of_lcm_hua: list of " +
                         std::to_string(values.size()) +
                         " exceeds the subset cap of " + std::to_string(cap));
  }
  const std::size_t n = values.size();
  const std::size_t full = std::size_t{1} << n;

  Rational acc = 1;
  for (const Integer& v : values) acc *= f.evaluate(v);

  // gcds[mask] = gcd of the subset encoded by mask, built incrementally.
  std::vector<Integer> gcds(full, 0);
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    gcds[mask] = rest == 0
                     ? values[low]
                     : boost::multiprecision::gcd(gcds[rest], values[low]);
    const int r = std::popcount(mask);
    if (r < 2) continue;
    const Rational term = f.evaluate(gcds[mask]);
    if (r % 2 == 1) {
      acc *= term;
    } else {
      acc /= term;  // legal: f never vanishes
    }
  }
  return acc;
}

}  // namespace periodlab
