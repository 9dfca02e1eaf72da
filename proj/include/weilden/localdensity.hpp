#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weilden/ffpoly.hpp"
#include "weilden/numeric.hpp"
#include "weilden/weilpoly.hpp"

namespace weilden {

/// The seven factorization shapes of f mod ell compatible with a cyclic
/// Galois group of order 2g (g an odd prime).
enum class ShapeKind {
  Split,              // [1]_1 ... [1]_2g
  QuadraticPairs,     // [2]_1 ... [2]_g
  DegreeGPair,        // [g]_1 [g]_2
  Irreducible,        // [2g]
  RamifiedLinear,     // [1]^2g
  RamifiedPair,       // [1]_1^g [1]_2^g
  RamifiedQuadratic,  // [2]^g
};

inline constexpr ShapeKind kAllShapes[] = {
    ShapeKind::Split,          ShapeKind::QuadraticPairs, ShapeKind::DegreeGPair,       ShapeKind::Irreducible,
    ShapeKind::RamifiedLinear, ShapeKind::RamifiedPair,   ShapeKind::RamifiedQuadratic,
};

std::string shape_label(ShapeKind kind);        // "[2g]", "[1]^2g", ...
std::string shape_label(ShapeKind kind, unsigned g);  // "[6]", "[1]^6", ...
ShapeKind parse_shape(const std::string& text);
bool is_semisimple(ShapeKind kind);

struct ClassShape {
  ShapeKind kind;
  unsigned e = 1;      // ramification index
  unsigned f_res = 1;  // residue degree
  unsigned r = 1;      // number of primes above ell
  friend bool operator==(const ClassShape&, const ClassShape&) = default;
};

/// (e, f, r) for a shape; e * f * r = 2g.
ClassShape make_shape(ShapeKind kind, unsigned g);

/// Factorization of f mod ell.
Factorization factor_mod(const WeilPolynomial& f, std::uint64_t ell, std::uint64_t seed = 0x5eed);

/// Maps the (degree, multiplicity) multiset to one of the seven shapes.
/// g = 1 is accepted as a sanity tier with the three classical shapes.
/// Throws NotRelevant otherwise. When the multiplier is given, each quadratic
/// of the shape [2]_1...[2]_g must be self-dual (constant term = multiplier).
ClassShape classify_shape(const Factorization& fs, unsigned g,
                          std::optional<std::uint64_t> multiplier = std::nullopt);

/// Order of the centralizer in GSp_2g(F_ell) of a cyclic element of the
/// given shape. Throws UnsupportedNonSemisimple for ramified shapes when g > 3.
BigInt centralizer_order(ShapeKind kind, std::uint64_t ell, unsigned g);

/// chi(ell) is zero or exp(pi i k / g), stored as k in [0, 2g).
struct CharacterPair {
  bool chi_zero = false;
  unsigned chi_exponent = 0;
  int chi_g = 0;  // chi^g(ell) in {-1, 0, 1}
  friend bool operator==(const CharacterPair&, const CharacterPair&) = default;
};

CharacterPair chi_values(ShapeKind kind, unsigned g);

/// prod over the odd characters chi^i (i = 1, 3, ..., 2g-1) of
/// (1 - chi^i(ell)/ell)^-1, evaluated exactly in Z[zeta_2g].
BigRational nu_ell_K(ShapeKind kind, std::uint64_t ell, unsigned g);
BigRational nu_ell_K(const CharacterPair& chi, std::uint64_t ell, unsigned g);

using CentralizerTable = std::function<BigInt(ShapeKind, std::uint64_t, unsigned)>;

struct LocalFactor {
  std::uint64_t ell = 0;
  ClassShape shape{ShapeKind::Split};
  BigRational nu_f;
  BigRational nu_K;
  bool matched = false;
};

/// nu_ell(f) = ell^g (ell - 1) / #Z together with the character side.
/// Throws EqualsP when ell = p, and propagates NotRelevant /
/// UnsupportedNonSemisimple.
LocalFactor nu_ell(const WeilPolynomial& f, std::uint64_t ell, std::uint64_t seed = 0x5eed);
LocalFactor nu_ell(const WeilPolynomial& f, std::uint64_t ell, const CentralizerTable& table,
                   std::uint64_t seed = 0x5eed);

/// Density at ell = p from the unit-root factor T^g + c_1 T^(g-1) + ... + c_g
/// mod p. Throws NotOrdinary or UnexpectedPFactorization.
BigRational nu_p(const WeilPolynomial& f, std::uint64_t seed = 0x5eed);

bool match_check(const WeilPolynomial& f, std::uint64_t ell, std::uint64_t seed = 0x5eed);

/// True when g is 1 or an odd prime (the supported density pipeline).
bool density_supported(unsigned g);

}  // namespace weilden
