#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "periodlab/exact_arith.hpp"

using namespace periodlab;

namespace {

std::map<Integer, unsigned> fmap(
    std::initializer_list<std::pair<long long, unsigned>> entries) {
  std::map<Integer, unsigned> out;
  for (const auto& [p, e] : entries) out[Integer(p)] = e;
  return out;
}

}  // namespace

TEST_CASE("factorize on small fixed inputs") {
  CHECK(factorize(1).factors().empty());
  CHECK(factorize(12).factors() == fmap({{2, 2}, {3, 1}}));
  CHECK(factorize(840).factors() == fmap({{2, 3}, {3, 1}, {5, 1}, {7, 1}}));
  CHECK(factorize(Integer("1000003")).factors() == fmap({{1000003, 1}}));
}

TEST_CASE("factorize rejects nonpositive input") {
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-6), std::invalid_argument);
}

TEST_CASE("factorize round-trips and produces prime keys") {
  for (long long n = 1; n <= 2000; ++n) {
    const FactoredInteger f = factorize(n);
    CHECK(f.value() == n);
    for (const auto& [p, e] : f.factors()) {
      CHECK(is_prime(p));
      CHECK(e >= 1);
    }
  }
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long long> dist(1, 1'000'000);
  for (int trial = 0; trial < 3000; ++trial) {
    const long long n = dist(rng);
    CHECK(factorize(n).value() == n);
  }
}

TEST_CASE("factorize splits cofactors beyond the trial-division bound") {
  const Integer p("1000003");
  const Integer q("1000033");
  CHECK(factorize(p * q).factors() == fmap({{1000003, 1}, {1000033, 1}}));
  CHECK(factorize(p * p).factors() == fmap({{1000003, 2}}));
  CHECK(factorize(p * q * 12).value() == p * q * 12);
}

TEST_CASE("FactoredInteger validates its entries") {
  CHECK_THROWS_AS(FactoredInteger(fmap({{4, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(FactoredInteger(fmap({{3, 0}})), std::invalid_argument);
  CHECK(FactoredInteger(fmap({{2, 1}, {3, 2}})).value() == 18);
  CHECK(FactoredInteger{}.is_one());
}

TEST_CASE("FactoredInteger::times adds exponents") {
  const FactoredInteger lhs = factorize(12);
  const FactoredInteger rhs = factorize(18);
  CHECK(lhs.times(rhs).value() == 216);
}

TEST_CASE("vp on fixed inputs") {
  CHECK(vp(2, 12) == 2);
  CHECK(vp(5, 7) == 0);
  CHECK(vp(3, 54) == 3);
  CHECK(vp(2, 1) == 0);
}

TEST_CASE("vp rejects composite p and zero n") {
  CHECK_THROWS_AS(vp(4, 12), std::invalid_argument);
  CHECK_THROWS_AS(vp(1, 12), std::invalid_argument);
  CHECK_THROWS_AS(vp(2, 0), std::invalid_argument);
}

TEST_CASE("vp is additive over products") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> dist(1, 100000);
  const Integer primes[] = {2, 3, 5, 7, 11};
  for (int trial = 0; trial < 2000; ++trial) {
    const Integer n = dist(rng);
    const Integer m = dist(rng);
    for (const Integer& p : primes) {
      CHECK(vp(p, n) + vp(p, m) == vp(p, n * m));
    }
  }
}

TEST_CASE("vp on rationals subtracts the denominator valuation") {
  CHECK(vp_rational(2, Rational(3, 8)) == -3);
  CHECK(vp_rational(2, Rational(12, 5)) == 2);
  CHECK_THROWS_AS(vp_rational(2, Rational(0)), std::invalid_argument);
}

TEST_CASE("lcm_upto on fixed inputs") {
  CHECK(lcm_upto(0).value() == 1);
  CHECK(lcm_upto(1).value() == 1);
  CHECK(lcm_upto(7).factors() == fmap({{2, 2}, {3, 1}, {5, 1}, {7, 1}}));
  CHECK(lcm_upto(7).value() == 420);
  CHECK(lcm_upto(8).factors() == fmap({{2, 3}, {3, 1}, {5, 1}, {7, 1}}));
  CHECK(lcm_upto(8).value() == 840);
}

TEST_CASE("lcm_upto matches a plain lcm fold") {
  std::vector<Integer> values;
  for (std::int64_t k = 1; k <= 60; ++k) {
    values.push_back(k);
    CHECK(lcm_upto(k).value() == lcm_list(values));
  }
}

TEST_CASE("lcm_upto exponents are maximal prime powers below k") {
  const FactoredInteger l100 = lcm_upto(100);
  for (const auto& [p, e] : l100.factors()) {
    CHECK(pow_integer(p, e) <= 100);
    CHECK(pow_integer(p, e + 1) > 100);
  }
}

TEST_CASE("lcm_list and gcd_list") {
  CHECK(lcm_list({4, 6}) == 12);
  CHECK(gcd_list({4, 6}) == 2);
  CHECK(lcm_list({3, 4, 5, 6}) == 60);
  CHECK(gcd_list({12, 18, 30}) == 6);
  CHECK_THROWS_AS(lcm_list({}), std::invalid_argument);
  CHECK_THROWS_AS(gcd_list({}), std::invalid_argument);
  CHECK_THROWS_AS(lcm_list({Integer(0)}), std::invalid_argument);
}

TEST_CASE("alternating_min_expansion on fixed multisets") {
  CHECK(alternating_min_expansion({3, 1}) == 3);
  CHECK(alternating_min_expansion({2, 2, 2}) == 2);
  CHECK(alternating_min_expansion({5, 3, 3}) == 5);  // 11 - 9 + 3
  CHECK(alternating_min_expansion({7}) == 7);
}

TEST_CASE("alternating_min_expansion equals max exhaustively") {
  // Every multiset of size <= 6 with entries in [0, 9].
  std::vector<long long> values;
  auto recurse = [&](auto&& self, long long lowest, std::size_t depth) -> void {
    if (!values.empty()) {
      const long long expected =
          *std::max_element(values.begin(), values.end());
      REQUIRE(alternating_min_expansion(values) == expected);
    }
    if (depth == 6) return;
    for (long long v = lowest; v <= 9; ++v) {
      values.push_back(v);
      self(self, v, depth + 1);
      values.pop_back();
    }
  };
  recurse(recurse, 0, 0);
}

TEST_CASE("alternating_min_expansion input validation") {
  CHECK_THROWS_AS(alternating_min_expansion({}), std::invalid_argument);
  CHECK_THROWS_AS(alternating_min_expansion({-1, 2}), std::invalid_argument);
  const std::vector<long long> too_many(21, 1);
  CHECK_THROWS_AS(alternating_min_expansion(too_many), capacity_error);
  CHECK(alternating_min_expansion(too_many, 21) == 1);
}

TEST_CASE("divisors_ascending") {
  CHECK(divisors_ascending(factorize(12)) ==
        std::vector<Integer>{1, 2, 3, 4, 6, 12});
  CHECK(divisors_ascending(factorize(1)) == std::vector<Integer>{1});
}

TEST_CASE("is_prime crosses the table boundary consistently") {
  CHECK(is_prime(999983));         // largest prime below 10^6
  CHECK_FALSE(is_prime(999999));
  CHECK(is_prime(Integer("1000003")));
  CHECK_FALSE(is_prime(Integer("1000001")));  // 101 * 9901
  CHECK(is_prime(Integer("2305843009213693951")));  // 2^61 - 1
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
}

TEST_CASE("rational_to_string renders lowest terms") {
  CHECK(rational_to_string(Rational(7, 2)) == "7/2");
  CHECK(rational_to_string(Rational(6, 3)) == "2");
  CHECK(rational_to_string(Rational(-3, 9)) == "-1/3");
  CHECK(rational_to_string(Rational(0)) == "0");
}

TEST_CASE("parse_integer is strict") {
  CHECK(parse_integer("840") == 840);
  CHECK(parse_integer("-17") == -17);
  CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("12x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("1.5"), std::invalid_argument);
}
