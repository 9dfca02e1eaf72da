#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weilden/localdensity.hpp"
#include "weilden/matrix_ff.hpp"

namespace weilden {

/// Order of GSp_{2g}(F_ell): ell^(g^2) (ell - 1) prod_{i=1..g} (ell^(2i) - 1).
BigInt gsp_order(unsigned g, std::uint64_t ell);

/// The standard form [[0, I_g], [-I_g, 0]].
MatrixFF standard_form(unsigned g, std::uint64_t ell);

/// m with M J M^T = m J and m != 0, if any.
std::optional<std::uint64_t> similitude_multiplier(const MatrixFF& m);
/// Same, for an arbitrary alternating form in place of J.
std::optional<std::uint64_t> similitude_multiplier(const MatrixFF& m, const MatrixFF& form);

/// Alternating form with +1 at (i, 2g-1-i) for i < g.
MatrixFF antidiagonal_form(unsigned g, std::uint64_t ell);

/// P with P J P^T = A, for an invertible alternating A (skew Gram-Schmidt).
MatrixFF darboux(const MatrixFF& a);

struct Representative {
  MatrixFF gamma;      // element of GSp with the requested charpoly and multiplier
  MatrixFF companion;  // companion matrix of fbar
  MatrixFF form;       // alternating A with C A C^T = m A
  MatrixFF basis;      // P with P J P^T = A; gamma = P^-1 C P
};

/// Cyclic element of GSp_{2g}(F_ell) with characteristic polynomial fbar and
/// multiplier m. Throws NoInvariantForm if none exists.
Representative representative(const FFPoly& fbar, std::uint64_t m);

/// Upper triangular matrix with blocks a(I - N), b(I + N + N^2) for the class
/// [1]^3 [1]^3. It preserves antidiagonal_form(3) with multiplier ab, not J.
MatrixFF explicit_pair_representative(std::uint64_t a, std::uint64_t b, std::uint64_t ell);

/// Basis of {X : X gamma = gamma X}.
std::vector<MatrixFF> commutant_basis(const MatrixFF& gamma);

/// Enumeration refused beyond this many commutant elements.
inline constexpr std::uint64_t kCentralizerLimit = 1000000000ULL;

/// |Z_GSp(gamma)| by enumerating the commutant. Throws TooLarge.
BigInt centralizer_count(const MatrixFF& gamma);

/// First m-symmetric charpoly of the given shape that admits a cyclic
/// representative, searching multipliers and coefficients in canonical order.
/// Empty when the search is exhaustive and nothing qualifies.
struct ShapeSample {
  FFPoly fbar;
  std::uint64_t multiplier = 1;
  Representative rep;
};
std::optional<ShapeSample> find_shape_sample(ShapeKind kind, std::uint64_t ell, unsigned g);

/// Degree-2g monic polynomials whose coefficients satisfy the symmetry
/// c_{2g-i} = m^(g-i) c_i: the possible charpolys of elements with multiplier m.
std::vector<FFPoly> symmetric_charpolys(std::uint64_t m, std::uint64_t ell, unsigned g);

struct CharPolyCensus {
  std::uint64_t ell = 2;
  unsigned g = 3;
  /// (ascending charpoly coefficients, multiplier) -> count
  std::map<std::pair<std::vector<std::uint64_t>, std::uint64_t>, std::uint64_t> counts;
  /// Same keys, restricted to cyclic elements.
  std::map<std::pair<std::vector<std::uint64_t>, std::uint64_t>, std::uint64_t> cyclic_counts;
  BigInt group_order;
  std::uint64_t generators = 0;

  std::uint64_t total() const;
  std::uint64_t count(const FFPoly& f, std::uint64_t m) const;
  std::uint64_t cyclic_count(const FFPoly& f, std::uint64_t m) const;
  /// One line per entry: "c0,c1,...,c2g m count cyclic_count", in map order.
  std::string export_lines() const;
};

/// Breadth-first closure of GSp_6(F_2) from seeded random transvection
/// products. Only (g, ell) = (3, 2) is supported; anything else is TooLarge.
CharPolyCensus enumerate_group(unsigned g, std::uint64_t ell, std::uint64_t seed = 1, unsigned threads = 1);

}  // namespace weilden
