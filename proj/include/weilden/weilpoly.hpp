#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilden/numeric.hpp"
#include "weilden/zpoly.hpp"

namespace weilden {

/// A q-Weil polynomial of degree 2g. Only `parse_weil` constructs one, so
/// every instance satisfies: monic, functional-equation symmetry, and all
/// roots on |z| = sqrt(q) (Sturm-certified through f+).
class WeilPolynomial {
 public:
  /// Descending coefficients, length 2g+1, coeffs[0] = 1.
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& q() const { return q_; }
  const BigInt& p() const { return p_; }
  unsigned long a() const { return a_; }
  unsigned g() const { return g_; }

  /// c_i in the descending indexing: coefficient of T^(2g-i).
  const BigInt& c(unsigned i) const { return coeffs_[i]; }
  const ZPoly& poly() const { return poly_; }

  std::string to_string() const;

  friend bool operator==(const WeilPolynomial& a, const WeilPolynomial& b) {
    return a.coeffs_ == b.coeffs_ && a.q_ == b.q_;
  }

 private:
  friend WeilPolynomial parse_weil(const std::vector<BigInt>&, const BigInt&);
  std::vector<BigInt> coeffs_;
  BigInt q_, p_;
  unsigned long a_ = 0;
  unsigned g_ = 0;
  ZPoly poly_;
};

/// Degree-g polynomial f+ with f(T) = T^g f+(T + q/T).
struct RealWeilPolynomial {
  std::vector<BigInt> coeffs;  // descending, monic
  BigInt q;
  ZPoly poly() const { return ZPoly::from_descending(coeffs); }
};

/// Validates and builds a WeilPolynomial. Throws Error with NotPrimePower,
/// NotMonic, OddDegree, SymmetryViolation or RootsOffCircle.
WeilPolynomial parse_weil(const std::vector<BigInt>& descending, const BigInt& q);
WeilPolynomial parse_weil(const std::string& comma_separated, const BigInt& q);

/// Comma-separated descending integers ("1,10,48").
std::vector<BigInt> parse_coefficient_list(const std::string& text);
std::string format_coefficient_list(const std::vector<BigInt>& coeffs);

/// Builds f+ from the Dickson recurrence D_k = x D_{k-1} - q D_{k-2}.
RealWeilPolynomial real_weil(const WeilPolynomial& f);

/// Inverse map: T^g f+(T + q/T) as a degree-2g polynomial.
ZPoly expand_from_real(const ZPoly& fplus, const BigInt& q);

/// q^(g(g-1)/2). Throws ConductorCrossCheckFailed if q^(g(g-1)) does not
/// divide disc(f).
BigInt conductor(const WeilPolynomial& f);

/// disc(f) / q^(g(g-1)), the discriminant of Z[pi, pi-bar].
BigInt order_discriminant(const WeilPolynomial& f);

struct FrobeniusAngles {
  /// theta_1 <= ... <= theta_g, each repeated by multiplicity.
  std::vector<Real> angles;
  std::vector<unsigned> multiplicity;  // parallel to `angles`
  /// Certified enclosure radius of each root 2 sqrt(q) cos(theta_j) of f+.
  Real root_radius;
  /// Certified bound on |theta_j - true angle| over all j.
  Real angle_error;
  std::vector<Real> real_roots;  // 2 sqrt(q) cos(theta_j), descending
};

FrobeniusAngles frobenius_angles(const WeilPolynomial& f, mpfr_prec_t precision = 128);

struct DiscCrossCheck {
  /// Relative error of the closed trigonometric forms; zero when both sides
  /// are exactly zero (repeated angles), flagged by `exact_zero_*`.
  double rel_err_f = 0.0;
  double rel_err_fplus = 0.0;
  bool exact_zero_f = false;
  bool exact_zero_fplus = false;
};

DiscCrossCheck disc_trig_crosscheck(const WeilPolynomial& f, mpfr_prec_t precision = 128);

struct ArchimedeanComponents {
  BigInt cond;
  BigInt disc_f;
  BigInt disc_fplus;
};

struct ArchimedeanFactor {
  Real value;
  ArchimedeanComponents components;
};

/// sqrt(|disc_f / disc_fplus|) / (cond * (2 pi)^g).
Real archimedean_value(const ArchimedeanComponents& c, unsigned g, mpfr_prec_t precision);

ArchimedeanFactor nu_infinity(const WeilPolynomial& f, mpfr_prec_t precision = 128);

}  // namespace weilden
