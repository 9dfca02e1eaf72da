#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace weilden {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// "num/den" with den omitted when it is 1; the lossless text form used in
/// every structured output.
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& z);
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

BigInt pow(const BigInt& base, unsigned long exponent);

/// Owning MPFR value. Precision is fixed at construction; binary operations
/// produce a result at the larger of the two operand precisions, rounded to
/// nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(double v, mpfr_prec_t bits);
  Real(const BigInt& v, mpfr_prec_t bits);
  Real(const BigRational& v, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact value of the (dyadic) float as a rational.
  BigRational to_rational() const;
  /// Exact, bit-preserving hexadecimal form ("%Ra"); parse_hex inverts it.
  std::string to_hex() const;
  static Real parse_hex(std::string_view text, mpfr_prec_t bits);
  std::string to_decimal(int digits = 20) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  static Real pi(mpfr_prec_t bits);

  friend Real sqrt(const Real& x);
  friend Real log(const Real& x);
  friend Real log1p(const Real& x);
  friend Real exp(const Real& x);
  friend Real abs(const Real& x);
  friend Real sin(const Real& x);
  friend Real cos(const Real& x);
  friend Real acos(const Real& x);
  friend Real pow(const Real& x, long n);

 private:
  mpfr_t value_;
};

}  // namespace weilden
