// Randomized property checks shared by the unit tests and the acceptance binary.
#pragma once

#include <random>
#include <string>

#include "oracles.hpp"
#include "weilden/error.hpp"
#include "weilden/ffpoly.hpp"
#include "weilden/gsp_oracle.hpp"
#include "weilden/weilpoly.hpp"

namespace props {

struct Outcome {
  int instances = 0;
  int failures = 0;
  std::string first_failure;
  void record(bool ok, const std::string& what) {
    ++instances;
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool passed(int minimum) const { return failures == 0 && instances >= minimum; }
};

inline const std::vector<long>& prime_powers() {
  static const std::vector<long> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49};
  return qs;
}

// c_{2g-i} = q^{g-i} c_i for the library's expansion of a random real Weil polynomial.
inline Outcome functional_equation(int n, std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < n; ++k) {
    const long q = prime_powers()[rng() % prime_powers().size()];
    const unsigned g = 1 + static_cast<unsigned>(rng() % 4);
    const auto fplus = oracle::random_real_weil(g, q, rng);
    const auto f = weilden::expand_from_real(weilden::ZPoly(fplus), q).ascending();
    bool ok = f.size() == 2 * g + 1;
    for (unsigned i = 0; ok && i <= g; ++i) ok = f[i] == oracle::power(q, g - i) * f[2 * g - i];
    try {
      weilden::parse_weil(std::vector<weilden::BigInt>(f.rbegin(), f.rend()), q);
    } catch (const weilden::Error&) {
      ok = false;
    }
    out.record(ok, "q=" + std::to_string(q) + " g=" + std::to_string(g));
  }
  return out;
}

// f(T) = T^g f+(T + q/T) with f+ recovered by the library and re-expanded by the oracle.
inline Outcome reexpansion(int n, std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < n; ++k) {
    const long q = prime_powers()[rng() % prime_powers().size()];
    const unsigned g = 1 + static_cast<unsigned>(rng() % 4);
    const auto f = oracle::dickson_expand(oracle::random_real_weil(g, q, rng), q);
    const auto w = weilden::parse_weil(std::vector<weilden::BigInt>(f.rbegin(), f.rend()), q);
    const auto fplus = oracle::descending_to_ascending(weilden::real_weil(w).coeffs);
    out.record(oracle::dickson_expand(fplus, q) == f, "q=" + std::to_string(q) + " g=" + std::to_string(g));
  }
  return out;
}

// Factors multiply back to the input and each factor is irreducible by exhaustive search.
inline Outcome factor_reconstruction(int n, std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  const std::uint64_t ells[] = {2, 3, 5, 7, 11};
  for (int k = 0; k < n; ++k) {
    const std::uint64_t ell = ells[rng() % 5];
    const std::size_t deg = 1 + rng() % 8;
    std::vector<std::uint64_t> c(deg + 1);
    for (auto& v : c) v = rng() % ell;
    c[deg] = 1;
    const weilden::FFPoly f(c, ell);
    const weilden::Factorization fs = weilden::factor(f, rng());
    bool ok = fs.product() == f;
    for (const auto& fp : fs.factors) ok = ok && oracle::brute_irreducible(fp.factor.ascending(), ell);
    out.record(ok, f.to_string() + " mod " + std::to_string(ell));
  }
  return out;
}

// For a random nondegenerate alternating A, the returned basis satisfies P J P^T = A.
inline Outcome darboux_basis(int n, std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  const std::uint64_t ells[] = {2, 3, 5, 7, 13};
  while (out.instances < n) {
    const std::uint64_t ell = ells[rng() % 5];
    const std::size_t g = 1 + rng() % 3;
    oracle::Mat a{2 * g, ell, std::vector<std::uint64_t>(4 * g * g, 0)};
    for (std::size_t i = 0; i < 2 * g; ++i)
      for (std::size_t j = i + 1; j < 2 * g; ++j) {
        a.at(i, j) = rng() % ell;
        a.at(j, i) = (ell - a.at(i, j)) % ell;
      }
    if (oracle::det(a) == 0) continue;
    bool ok = true;
    try {
      const weilden::MatrixFF p = weilden::darboux(weilden::MatrixFF(2 * g, ell, a.a));
      const oracle::Mat P{2 * g, ell, p.entries()};
      ok = oracle::mat_mul(oracle::mat_mul(P, oracle::standard_j(g, ell)), oracle::mat_transpose(P)).a == a.a;
    } catch (const weilden::Error&) {
      ok = false;
    }
    out.record(ok, "ell=" + std::to_string(ell) + " g=" + std::to_string(g));
  }
  return out;
}

// Random cyclic similitudes have a commutant of dimension 2g made of commuting matrices.
inline Outcome commutant_dimension(int n, std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  const std::uint64_t ells[] = {3, 5, 7};
  while (out.instances < n) {
    const std::uint64_t ell = ells[rng() % 3];
    const unsigned g = 1 + static_cast<unsigned>(rng() % 3);
    const std::uint64_t m = 1 + rng() % (ell - 1);
    const auto polys = weilden::symmetric_charpolys(m, ell, g);
    const weilden::FFPoly& f = polys[rng() % polys.size()];
    weilden::Representative rep;
    try {
      rep = weilden::representative(f, m);
    } catch (const weilden::Error&) {
      continue;  // no nondegenerate invariant form for this charpoly
    }
    const oracle::Mat G{2 * g, ell, rep.gamma.entries()};
    const oracle::Mat J = oracle::standard_j(g, ell);
    oracle::Mat mJ = J;
    for (auto& v : mJ.a) v = v * m % ell;
    bool ok = oracle::mat_mul(oracle::mat_mul(G, J), oracle::mat_transpose(G)).a == mJ.a;
    const auto basis = weilden::commutant_basis(rep.gamma);
    ok = ok && basis.size() == 2 * g;
    for (const auto& b : basis) {
      const oracle::Mat B{2 * g, ell, b.entries()};
      ok = ok && oracle::mat_mul(G, B).a == oracle::mat_mul(B, G).a;
    }
    out.record(ok, f.to_string() + " mod " + std::to_string(ell) + " m=" + std::to_string(m));
  }
  return out;
}

}  // namespace props
