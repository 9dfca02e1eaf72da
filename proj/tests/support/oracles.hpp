// Naive reference computations used as oracles. Nothing here calls into the library.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;
using Poly = std::vector<Z>;  // ascending

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Poly descending_to_ascending(const std::vector<Z>& d) { return Poly(d.rbegin(), d.rend()); }

inline Z binomial(unsigned n, unsigned k) {
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Z power(const Z& b, unsigned e) {
  Z r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// T^g f+(T + q/T) expanded term by term with the binomial theorem.
inline Poly dickson_expand(const Poly& fplus, const Z& q) {
  const unsigned g = static_cast<unsigned>(fplus.size() - 1);
  Poly out(2 * g + 1, 0);
  for (unsigned k = 0; k <= g; ++k) {
    // T^g (T + q/T)^k = sum_j C(k,j) q^j T^(g + k - 2j)
    for (unsigned j = 0; j <= k; ++j) out[g + k - 2 * j] += fplus[k] * binomial(k, j) * power(q, j);
  }
  return out;
}

inline Z quadratic_disc(const Z& a, const Z& b, const Z& c) { return b * b - 4 * a * c; }

// Discriminant of the monic cubic x^3 + a x^2 + b x + c.
inline Z cubic_disc(const Z& a, const Z& b, const Z& c) {
  return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

inline bool trial_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> trial_primes_below(std::uint64_t b) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n < b; ++n)
    if (trial_is_prime(n)) out.push_back(n);
  return out;
}

// |GSp_2g(F_l)| = (l - 1) l^(g^2) prod_{i=1..g} (l^(2i) - 1)
inline Z gsp_order(unsigned g, std::uint64_t l) {
  Z L(static_cast<unsigned long>(l));
  Z r = (L - 1) * power(L, g * g);
  for (unsigned i = 1; i <= g; ++i) r *= power(L, 2 * i) - 1;
  return r;
}

// Polynomials mod l, ascending, monic results.
using Fp = std::vector<std::uint64_t>;

inline Fp fp_trim(Fp a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Fp fp_mul(const Fp& a, const Fp& b, std::uint64_t l) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % l;
  return fp_trim(r);
}

inline Fp fp_mod(Fp a, const Fp& b, std::uint64_t l) {
  std::uint64_t inv = 1;
  while ((b.back() * inv) % l != 1) ++inv;
  a = fp_trim(a);
  while (a.size() >= b.size()) {
    const std::uint64_t c = (a.back() * inv) % l;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (l - (c * b[i]) % l)) % l;
    a = fp_trim(a);
  }
  return a;
}

// Irreducible iff no monic divisor of degree 1..deg/2 exists; exhaustive.
inline bool brute_irreducible(const Fp& f, std::uint64_t l) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    Fp h(d + 1, 0);
    h[d] = 1;
    for (;;) {
      if (fp_mod(f, h, l).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++h[i] == l) h[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

// Row-major n x n matrices mod l.
struct Mat {
  std::size_t n;
  std::uint64_t l;
  std::vector<std::uint64_t> a;
  std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

inline Mat mat_mul(const Mat& x, const Mat& y) {
  Mat r{x.n, x.l, std::vector<std::uint64_t>(x.n * x.n, 0)};
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k)
      for (std::size_t j = 0; j < x.n; ++j) r.at(i, j) = (r.at(i, j) + x.at(i, k) * y.at(k, j)) % x.l;
  return r;
}

inline Mat mat_transpose(const Mat& x) {
  Mat r = x;
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) r.at(i, j) = x.at(j, i);
  return r;
}

// J = [[0, I], [-I, 0]]
inline Mat standard_j(std::size_t g, std::uint64_t l) {
  Mat j{2 * g, l, std::vector<std::uint64_t>(4 * g * g, 0)};
  for (std::size_t i = 0; i < g; ++i) {
    j.at(i, g + i) = 1;
    j.at(g + i, i) = l - 1;
  }
  return j;
}

// Cofactor-free determinant by Gaussian elimination, kept separate from the library's.
inline std::uint64_t det(Mat m) {
  const std::uint64_t l = m.l;
  std::uint64_t d = 1;
  auto inv = [l](std::uint64_t x) {
    std::uint64_t r = 1, b = x % l, e = l - 2;
    while (e) {
      if (e & 1) r = r * b % l;
      b = b * b % l;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < m.n; ++c) {
    std::size_t p = c;
    while (p < m.n && m.at(p, c) == 0) ++p;
    if (p == m.n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < m.n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = (l - d) % l;
    }
    d = d * m.at(c, c) % l;
    const std::uint64_t iv = inv(m.at(c, c));
    for (std::size_t r = c + 1; r < m.n; ++r) {
      const std::uint64_t f = m.at(r, c) * iv % l;
      for (std::size_t j = c; j < m.n; ++j) m.at(r, j) = (m.at(r, j) + l - f * m.at(c, j) % l) % l;
    }
  }
  return d;
}

// A random integer-rooted real Weil polynomial prod (x - a_i) with |a_i| < 2 sqrt(q).
inline Poly random_real_weil(unsigned g, const Z& q, std::mt19937_64& rng) {
  long bound = 0;
  while (Z((bound + 1) * (bound + 1)) < 4 * q) ++bound;  // largest a with a^2 < 4q
  std::uniform_int_distribution<long> pick(-bound, bound);
  Poly f{1};
  for (unsigned i = 0; i < g; ++i) f = mul(f, Poly{Z(-pick(rng)), 1});
  return f;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace oracle
