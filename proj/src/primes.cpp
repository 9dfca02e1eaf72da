#include "weilden/primes.hpp"

#include <cmath>

#include "weilden/error.hpp"

namespace weilden {

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  return primes_in_range(0, bound);
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi <= 2 || hi <= lo) return out;
  std::vector<bool> composite(hi, false);
  for (std::uint64_t i = 2; i < hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (std::uint64_t j = i * i; j < hi; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime(std::uint64_t n) { return is_prime(BigInt(static_cast<unsigned long>(n))); }

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  // GMP >= 6.2 runs BPSW first, which is deterministic below 2^64.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::optional<PrimePower> as_prime_power(const BigInt& q) {
  if (q < 2) return std::nullopt;
  const auto bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  for (unsigned long a = bits; a >= 1; --a) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), a) != 0 && is_prime(root)) {
      return PrimePower{root, a};
    }
  }
  return std::nullopt;
}

PartialFactorization factor_partially(const BigInt& n, std::uint64_t trial_bound) {
  PartialFactorization pf;
  BigInt m = abs(n);
  if (m == 0) raise(ErrorCode::InvalidArgument, "factor_partially(0)");
  for (std::uint64_t p : primes_below(trial_bound + 1)) {
    if (m == 1) break;
    if (BigInt(static_cast<unsigned long>(p)) * p > m) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) pf.factors.push_back({BigInt(static_cast<unsigned long>(p)), e});
  }
  if (m == 1) return pf;
  if (is_prime(m)) {
    pf.factors.push_back({m, 1});
    return pf;
  }
  // A cofactor below trial_bound^2 with no small factor would be prime, so m
  // is large here; the only structure we can still certify is a prime power.
  if (auto pp = as_prime_power(m)) {
    pf.factors.push_back({pp->p, pp->a});
    return pf;
  }
  pf.cofactor = m;
  pf.complete = false;
  return pf;
}

Squarefree squarefree_status(const PartialFactorization& pf) {
  for (const auto& f : pf.factors) {
    if (f.exponent > 1) return Squarefree::No;
  }
  if (!pf.complete) {
    if (mpz_perfect_square_p(pf.cofactor.get_mpz_t())) return Squarefree::No;
    return Squarefree::Unknown;
  }
  return Squarefree::Yes;
}

}  // namespace weilden
