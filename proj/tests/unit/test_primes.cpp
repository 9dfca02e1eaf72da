#include <doctest.h>

#include "oracles.hpp"
#include "weilden/primes.hpp"

using namespace weilden;

TEST_CASE("sieve agrees with trial division") {
  CHECK(primes_below(5000) == oracle::trial_primes_below(5000));
  CHECK(primes_below(2).empty());
  CHECK(primes_below(3) == std::vector<std::uint64_t>{2});
  const auto r = primes_in_range(100, 200);
  std::vector<std::uint64_t> expect;
  for (auto p : oracle::trial_primes_below(200))
    if (p >= 100) expect.push_back(p);
  CHECK(r == expect);
  for (std::uint64_t n = 0; n < 3000; ++n) CHECK(is_prime(n) == oracle::trial_is_prime(n));
}

TEST_CASE("prime powers are recognised") {
  auto pp = as_prime_power(BigInt(343));
  REQUIRE(pp);
  CHECK(pp->p == 7);
  CHECK(pp->a == 3);
  CHECK(as_prime_power(BigInt(2))->a == 1);
  CHECK_FALSE(as_prime_power(BigInt(12)));
  CHECK_FALSE(as_prime_power(BigInt(1)));
  CHECK_FALSE(as_prime_power(BigInt(0)));
}

TEST_CASE("partial factorizations multiply back") {
  for (BigInt n : {BigInt(2476099), BigInt(-19683), BigInt(360), BigInt("1000000016000000063")}) {
    const auto pf = factor_partially(n);
    BigInt prod = pf.cofactor;
    for (const auto& pe : pf.factors) prod *= oracle::power(pe.prime, pe.exponent);
    CHECK(prod == abs(n));
  }
  CHECK(squarefree_status(factor_partially(BigInt(30))) == Squarefree::Yes);
  CHECK(squarefree_status(factor_partially(BigInt(2476099))) == Squarefree::No);
}
