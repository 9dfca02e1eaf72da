#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "weilden/numeric.hpp"

namespace weilden {

/// Dense polynomial over the integers. Stored ascending (index i holds the
/// coefficient of x^i) with no trailing zeros; the zero polynomial is empty.
/// Text and API boundaries use descending order.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<BigInt> ascending);

  static ZPoly from_descending(const std::vector<BigInt>& descending);
  static ZPoly monomial(const BigInt& c, std::size_t degree);
  static ZPoly constant(const BigInt& c);
  static ZPoly x();

  std::vector<BigInt> descending() const;
  const std::vector<BigInt>& ascending() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const BigInt& lc() const { return c_.back(); }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  BigInt eval(const BigInt& x) const;
  BigRational eval(const BigRational& x) const;

  ZPoly derivative() const;
  BigInt content() const;
  ZPoly primitive_part() const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const BigInt& s);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const BigInt& s) { return a *= s; }
  ZPoly operator-() const;
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  /// Exact division of every coefficient by d (must divide the content).
  ZPoly divexact(const BigInt& d) const;

  std::string to_string(const char* var = "x") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

/// Exact quotient a / b over Z[x]; throws if b does not divide a exactly.
ZPoly divide_exact(const ZPoly& a, const ZPoly& b);

/// Resultant via the subresultant polynomial remainder sequence.
BigInt resultant(const ZPoly& a, const ZPoly& b);

/// disc(p) = (-1)^(n(n-1)/2) res(p, p') / lc(p).
BigInt discriminant(const ZPoly& p);

/// Primitive greatest common divisor over Z[x] (positive leading coefficient).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// p / gcd(p, p'), normalised to positive leading coefficient.
ZPoly squarefree_part(const ZPoly& p);

/// A point of Q(sqrt(d)): rational + irrational * sqrt(d), with d > 0 not
/// necessarily squarefree. Used to evaluate Sturm sequences at +-2*sqrt(q).
struct QuadraticPoint {
  BigRational rational;
  BigRational irrational;
  BigInt radicand;
};

int sign(const QuadraticPoint& v);
QuadraticPoint eval(const ZPoly& p, const QuadraticPoint& x);

/// Sturm sequence of a squarefree polynomial with integer coefficients,
/// built from signed primitive pseudo-remainders.
class SturmSequence {
 public:
  explicit SturmSequence(const ZPoly& p);

  const std::vector<ZPoly>& polys() const { return seq_; }

  int variations_at(const BigRational& x) const;
  int variations_at(const QuadraticPoint& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;

  /// Distinct real roots in (lo, hi]; endpoints may be roots.
  int count_in(const BigRational& lo, const BigRational& hi) const;
  int count_real() const;

 private:
  std::vector<ZPoly> seq_;
};

}  // namespace weilden
