#include "weilden/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "weilden/error.hpp"

namespace weilden {

std::string to_string(const BigRational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.pop_back();
  std::size_t start = s.find_first_not_of(' ');
  if (start == std::string::npos) raise(ErrorCode::ParseError, "empty integer");
  s = s.substr(start);
  if (s[0] == '+') s = s.substr(1);
  BigInt z;
  if (s.empty() || z.set_str(s, 10) != 0) raise(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
  return z;
}

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) raise(ErrorCode::ParseError, "zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double v, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(const BigInt& v, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const BigRational& v, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

BigRational Real::to_rational() const {
  if (!mpfr_number_p(value_)) raise(ErrorCode::InvalidArgument, "non-finite real");
  BigInt mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
  BigRational r(mant);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

std::string Real::to_hex() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Real Real::parse_hex(std::string_view text, mpfr_prec_t bits) {
  Real r(bits);
  std::string s(text);
  if (mpfr_set_str(r.value_, s.c_str(), 0, MPFR_RNDN) != 0) {
    raise(ErrorCode::ParseError, "bad real '" + s + "'");
  }
  return r;
}

std::string Real::to_decimal(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

#define WEILDEN_UNARY(name, fn)                 \
  Real name(const Real& x) {                    \
    Real r(x.precision());                      \
    fn(r.value_, x.value_, MPFR_RNDN);          \
    return r;                                   \
  }

WEILDEN_UNARY(sqrt, mpfr_sqrt)
WEILDEN_UNARY(log, mpfr_log)
WEILDEN_UNARY(log1p, mpfr_log1p)
WEILDEN_UNARY(exp, mpfr_exp)
WEILDEN_UNARY(abs, mpfr_abs)
WEILDEN_UNARY(sin, mpfr_sin)
WEILDEN_UNARY(cos, mpfr_cos)
WEILDEN_UNARY(acos, mpfr_acos)

#undef WEILDEN_UNARY

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.value_, x.value_, n, MPFR_RNDN);
  return r;
}

}  // namespace weilden
