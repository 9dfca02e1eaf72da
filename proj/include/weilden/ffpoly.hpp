#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weilden/zpoly.hpp"

namespace weilden {

/// Polynomial over F_ell for a prime ell < 2^63. Ascending storage, trimmed.
class FFPoly {
 public:
  FFPoly() = default;
  FFPoly(std::vector<std::uint64_t> ascending, std::uint64_t ell);

  static FFPoly from_descending(const std::vector<std::uint64_t>& descending, std::uint64_t ell);
  static FFPoly reduce(const ZPoly& p, std::uint64_t ell);
  static FFPoly constant(std::uint64_t c, std::uint64_t ell);
  static FFPoly x(std::uint64_t ell);

  std::uint64_t modulus() const { return ell_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::uint64_t lc() const { return c_.back(); }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint64_t>& ascending() const { return c_; }
  std::vector<std::uint64_t> descending() const { return {c_.rbegin(), c_.rend()}; }

  std::uint64_t eval(std::uint64_t x) const;
  FFPoly derivative() const;
  FFPoly monic() const;

  FFPoly& operator+=(const FFPoly& o);
  FFPoly& operator-=(const FFPoly& o);
  friend FFPoly operator+(FFPoly a, const FFPoly& b) { return a += b; }
  friend FFPoly operator-(FFPoly a, const FFPoly& b) { return a -= b; }
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
  FFPoly scaled(std::uint64_t s) const;
  friend bool operator==(const FFPoly& a, const FFPoly& b) { return a.ell_ == b.ell_ && a.c_ == b.c_; }

  std::string to_string(const char* var = "T") const;

 private:
  void trim();
  std::vector<std::uint64_t> c_;
  std::uint64_t ell_ = 2;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b);
FFPoly operator%(const FFPoly& a, const FFPoly& b);
FFPoly operator/(const FFPoly& a, const FFPoly& b);
/// Monic gcd (zero if both inputs are zero).
FFPoly gcd(const FFPoly& a, const FFPoly& b);
FFPoly powmod(const FFPoly& base, const BigInt& exponent, const FFPoly& modulus);
FFPoly powmod(const FFPoly& base, std::uint64_t exponent, const FFPoly& modulus);

/// Canonical order: degree, then descending coefficients lexicographically.
bool canonical_less(const FFPoly& a, const FFPoly& b);

struct FactorPower {
  FFPoly factor;  // monic irreducible
  unsigned multiplicity = 1;
};

/// Complete factorization of a monic polynomial.
struct Factorization {
  std::vector<FactorPower> factors;  // canonical order, pairwise distinct
  bool ramified = false;             // some multiplicity > 1

  FFPoly product() const;
};

/// Squarefree decomposition, distinct-degree factorization, then
/// Cantor-Zassenhaus equal-degree splitting driven by `seed`. The result is
/// independent of the seed.
Factorization factor(const FFPoly& f, std::uint64_t seed = 0x5eed);

/// Rabin irreducibility test.
bool is_irreducible(const FFPoly& f);

}  // namespace weilden
