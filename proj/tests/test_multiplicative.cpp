#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "periodlab/multiplicative.hpp"

using namespace periodlab;

namespace {

// Independent phi oracle: count integers in [1, n] coprime to n.
Integer naive_phi(long long n) {
  long long count = 0;
  for (long long j = 1; j <= n; ++j) {
    if (std::gcd(j, n) == 1) ++count;
  }
  return count;
}

Integer naive_sigma(long long n, unsigned alpha) {
  Integer sum = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d == 0) sum += pow_integer(Integer(d), alpha);
  }
  return sum;
}

std::vector<MultiplicativeFunction> builtin_sample() {
  std::vector<MultiplicativeFunction> out;
  out.push_back(euler_phi());
  out.push_back(divisor_power_sum(0));
  out.push_back(divisor_power_sum(1));
  out.push_back(integer_power(1));
  out.push_back(integer_power(-1));
  out.push_back(constant_one());
  return out;
}

}  // namespace

TEST_CASE("builtin values on fixed inputs") {
  CHECK(euler_phi().evaluate(Integer(12)) == 4);
  CHECK(euler_phi().evaluate(Integer(1)) == 1);
  CHECK(euler_phi().evaluate(Integer(504)) == 144);
  CHECK(divisor_power_sum(1).evaluate(Integer(6)) == 12);
  CHECK(divisor_power_sum(0).evaluate(Integer(12)) == 6);
  CHECK(integer_power(-1).evaluate(Integer(8)) == Rational(1, 8));
  CHECK(integer_power(2).evaluate(Integer(6)) == 36);
  CHECK(constant_one().evaluate(Integer(5040)) == 1);
}

TEST_CASE("phi matches the coprime-counting oracle") {
  for (long long n = 1; n <= 500; ++n) {
    CHECK(euler_phi().evaluate(Integer(n)) == naive_phi(n));
  }
}

TEST_CASE("sigma matches the divisor-sum oracle") {
  for (long long n = 1; n <= 200; ++n) {
    CHECK(divisor_power_sum(0).evaluate(Integer(n)) == naive_sigma(n, 0));
    CHECK(divisor_power_sum(1).evaluate(Integer(n)) == naive_sigma(n, 1));
    CHECK(divisor_power_sum(2).evaluate(Integer(n)) == naive_sigma(n, 2));
  }
}

TEST_CASE("evaluation rejects nonpositive arguments") {
  CHECK_THROWS_AS(euler_phi().evaluate(Integer(0)), std::invalid_argument);
  CHECK_THROWS_AS(euler_phi().evaluate(Integer(-3)), std::invalid_argument);
}

TEST_CASE("a vanishing rule is rejected at evaluation time") {
  const MultiplicativeFunction bad(
      "bad", [](const Integer&, unsigned) -> Rational { return 0; });
  CHECK_THROWS_AS(bad.evaluate(Integer(2)), invariant_error);
  CHECK(bad.evaluate(Integer(1)) == 1);  // empty product never hits the rule
}

TEST_CASE("make_builtin parses the supported tags") {
  CHECK(make_builtin("phi").evaluate(Integer(12)) == 4);
  CHECK(make_builtin("one").evaluate(Integer(12)) == 1);
  CHECK(make_builtin("sigma:1").evaluate(Integer(6)) == 12);
  CHECK(make_builtin("pow:-1").evaluate(Integer(8)) == Rational(1, 8));
  CHECK(make_builtin("pow:3").name() == "pow:3");
}

TEST_CASE("make_builtin rejects malformed tags") {
  CHECK_THROWS_AS(make_builtin("pow:1.5"), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin("pow:"), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin("sigma:-1"), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin("sigma:x"), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin("tau"), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin(""), std::invalid_argument);
}

TEST_CASE("multiplicativity on coprime pairs") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> dist(1, 400);
  for (const auto& f : builtin_sample()) {
    for (int trial = 0; trial < 400; ++trial) {
      const long long m = dist(rng);
      const long long n = dist(rng);
      if (std::gcd(m, n) != 1) continue;
      CHECK(f.evaluate(Integer(m * n)) ==
            f.evaluate(Integer(m)) * f.evaluate(Integer(n)));
    }
  }
}

TEST_CASE("builtins never vanish") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long long> dist(1, 100000);
  for (const auto& f : builtin_sample()) {
    for (int trial = 0; trial < 200; ++trial) {
      CHECK(f.evaluate(Integer(dist(rng))) != 0);
    }
  }
}

TEST_CASE("f_of_lcm_direct on fixed inputs") {
  CHECK(f_of_lcm_direct(euler_phi(), {4, 6}) == 4);
  CHECK(f_of_lcm_direct(euler_phi(), {2, 3}) == 2);
  CHECK(f_of_lcm_direct(constant_one(), {5, 7, 9}) == 1);
  CHECK_THROWS_AS(f_of_lcm_direct(euler_phi(), {}), std::invalid_argument);
}

TEST_CASE("f_of_lcm_direct equals evaluating f at lcm_list") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long long> dist(1, 50);
  std::uniform_int_distribution<int> len_dist(1, 5);
  for (const auto& f : builtin_sample()) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Integer> values;
      const int len = len_dist(rng);
      for (int i = 0; i < len; ++i) values.push_back(dist(rng));
      CHECK(f_of_lcm_direct(f, values) == f.evaluate(lcm_list(values)));
    }
  }
}

TEST_CASE("f_of_lcm_hua on fixed inputs") {
  CHECK(f_of_lcm_hua(euler_phi(), {4, 6}) == 4);
  CHECK(f_of_lcm_hua(euler_phi(), {2, 3}) == 2);
  CHECK(f_of_lcm_hua(integer_power(1), {6, 10, 15}) == 30);
  CHECK_THROWS_AS(f_of_lcm_hua(euler_phi(), {}), std::invalid_argument);
  const std::vector<Integer> too_many(21, 2);
  CHECK_THROWS_AS(f_of_lcm_hua(euler_phi(), too_many), capacity_error);
}

TEST_CASE("hua expansion agrees with the direct lcm evaluation") {
  std::mt19937 rng(20240812);
  std::uniform_int_distribution<long long> dist(1, 50);
  std::uniform_int_distribution<int> len_dist(1, 6);
  const auto specs = builtin_sample();
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Integer> values;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) values.push_back(dist(rng));
    for (const auto& f : specs) {
      CHECK(f_of_lcm_hua(f, values) == f_of_lcm_direct(f, values));
    }
  }
}

TEST_CASE("equal pairwise gcd matrices give equal product-over-lcm ratios") {
  // Windows shifted by c*lcm(1..k) have the same pairwise gcd matrix; the
  // ratio prod f(a_i) / f(lcm a_i) must then coincide as well.
  std::mt19937 rng(314159);
  std::uniform_int_distribution<long long> small(1, 4);
  std::uniform_int_distribution<long long> offset(0, 4);
  std::uniform_int_distribution<long long> n_dist(1, 300);
  const auto specs = builtin_sample();
  for (int trial = 0; trial < 300; ++trial) {
    const long long k = small(rng);
    const long long a = small(rng);
    const long long b = offset(rng);
    const long long c = small(rng);
    const long long n = n_dist(rng);
    const Integer clk = Integer(c) * lcm_upto(k).value();

    std::vector<Integer> first, second;
    for (long long i = 0; i <= k; ++i) {
      first.push_back(Integer(b) + Integer(a) * (n + i * c));
      second.push_back(Integer(b) + Integer(a) * (Integer(n) + i * c + clk));
    }
    for (std::size_t i = 0; i < first.size(); ++i) {
      for (std::size_t j = i + 1; j < first.size(); ++j) {
        REQUIRE(boost::multiprecision::gcd(first[i], first[j]) ==
                boost::multiprecision::gcd(second[i], second[j]));
      }
    }
    for (const auto& f : specs) {
      Rational lhs = 1, rhs = 1;
      for (const Integer& v : first) lhs *= f.evaluate(v);
      for (const Integer& v : second) rhs *= f.evaluate(v);
      lhs /= f_of_lcm_direct(f, first);
      rhs /= f_of_lcm_direct(f, second);
      CHECK(lhs == rhs);
    }
  }
}
