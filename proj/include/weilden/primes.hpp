#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weilden/numeric.hpp"

namespace weilden {

/// Primes p with p < bound, ascending.
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

/// Primes p with lo <= p < hi, ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

struct PrimePower {
  BigInt p;
  unsigned long a = 0;
};

/// Writes q = p^a with p prime, if possible.
std::optional<PrimePower> as_prime_power(const BigInt& q);

struct PrimeExponent {
  BigInt prime;
  unsigned long exponent = 0;
};

/// Partial factorization by trial division up to `trial_bound`, followed by a
/// primality / perfect-power test of the cofactor. `complete` is true when the
/// factor list is the full factorization of |n|.
struct PartialFactorization {
  std::vector<PrimeExponent> factors;
  BigInt cofactor = 1;
  bool complete = true;
};

PartialFactorization factor_partially(const BigInt& n, std::uint64_t trial_bound = 1000000);

enum class Squarefree { Yes, No, Unknown };

Squarefree squarefree_status(const PartialFactorization& pf);

}  // namespace weilden
