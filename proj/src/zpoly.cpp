#include "weilden/zpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "weilden/error.hpp"

namespace weilden {

ZPoly::ZPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

ZPoly ZPoly::from_descending(const std::vector<BigInt>& descending) {
  return ZPoly(std::vector<BigInt>(descending.rbegin(), descending.rend()));
}

ZPoly ZPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::constant(const BigInt& c) { return ZPoly(std::vector<BigInt>{c}); }

ZPoly ZPoly::x() { return monomial(1, 1); }

std::vector<BigInt> ZPoly::descending() const { return {c_.rbegin(), c_.rend()}; }

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt ZPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational ZPoly::eval(const BigRational& x) const {
  // Homogenised Horner keeps the arithmetic in integers.
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = 0;
  BigInt den_pow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  if (c_.empty()) return 0;
  BigRational r(acc, pow(den, static_cast<unsigned long>(degree())));
  r.canonicalize();
  return r;
}

ZPoly ZPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return ZPoly(std::move(d));
}

BigInt ZPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (lc() < 0) g = -g;
  return divexact(g);
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const BigInt& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-() const {
  ZPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

ZPoly ZPoly::divexact(const BigInt& d) const {
  ZPoly r(*this);
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return r;
}

std::string ZPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const BigInt& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) raise(ErrorCode::ZeroPolynomial, "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.ascending();
  const auto& bc = b.ascending();
  const long db = b.degree();
  const BigInt& lb = b.lc();
  for (long dr = a.degree(); dr >= db; --dr) {
    const BigInt lead = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= lb;
    if (lead != 0) {
      const std::size_t shift = static_cast<std::size_t>(dr - db);
      for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= lead * bc[j];
    }
  }
  return ZPoly(std::move(r));
}

ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) raise(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) raise(ErrorCode::InvalidArgument, "inexact polynomial division");
  std::vector<BigInt> r = a.ascending();
  const auto& bc = b.ascending();
  const long db = b.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1), BigInt(0));
  for (long dr = a.degree(); dr >= db; --dr) {
    BigInt& lead = r[static_cast<std::size_t>(dr)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), b.lc().get_mpz_t())) {
      raise(ErrorCode::InvalidArgument, "inexact polynomial division");
    }
    BigInt t;
    mpz_divexact(t.get_mpz_t(), lead.get_mpz_t(), b.lc().get_mpz_t());
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    q[shift] = t;
    for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= t * bc[j];
  }
  if (!ZPoly(std::move(r)).is_zero()) raise(ErrorCode::InvalidArgument, "inexact polynomial division");
  return ZPoly(std::move(q));
}

namespace {

BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

BigInt resultant(const ZPoly& a_in, const ZPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  ZPoly A = a_in;
  ZPoly B = b_in;
  BigInt ca = A.content();
  BigInt cb = B.content();
  A = A.divexact(ca);
  B = B.divexact(cb);
  BigInt t = pow(ca, static_cast<unsigned long>(B.degree())) * pow(cb, static_cast<unsigned long>(A.degree()));
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
  }
  BigInt g = 1;
  BigInt h = 1;
  while (B.degree() > 0) {
    const long delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    ZPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = R.divexact(g * pow(h, static_cast<unsigned long>(delta)));
    g = A.lc();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_quotient(pow(g, static_cast<unsigned long>(delta)), pow(h, static_cast<unsigned long>(delta - 1)));
    }
    if (B.is_zero()) return 0;
  }
  const long da = A.degree();
  if (da == 0) return s * t;
  h = exact_quotient(pow(B.lc(), static_cast<unsigned long>(da)), pow(h, static_cast<unsigned long>(da - 1)));
  return s * t * h;
}

BigInt discriminant(const ZPoly& p) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "discriminant of zero polynomial");
  const long n = p.degree();
  if (n < 1) raise(ErrorCode::InvalidArgument, "discriminant needs degree >= 1");
  if (n == 1) return 1;
  BigInt r = exact_quotient(resultant(p, p.derivative()), p.lc());
  if (((n * (n - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  ZPoly x = a.primitive_part();
  ZPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ZPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

ZPoly squarefree_part(const ZPoly& p) {
  if (p.degree() <= 0) return p.primitive_part();
  ZPoly g = gcd(p, p.derivative());
  return divide_exact(p.primitive_part(), g);
}

int sign(const QuadraticPoint& v) {
  const int sa = sgn(v.rational);
  const int sb = sgn(v.irrational) * (v.radicand > 0 ? 1 : 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 * d.
  BigRational lhs = v.rational * v.rational;
  BigRational rhs = v.irrational * v.irrational * BigRational(v.radicand);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

QuadraticPoint eval(const ZPoly& p, const QuadraticPoint& x) {
  // Horner in Q(sqrt d): (u + v r)(a + b r) = (ua + vb d) + (ub + va) r.
  QuadraticPoint acc{0, 0, x.radicand};
  const auto& c = p.ascending();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    BigRational u = acc.rational * x.rational + acc.irrational * x.irrational * BigRational(x.radicand);
    BigRational v = acc.rational * x.irrational + acc.irrational * x.rational;
    acc.rational = u + BigRational(*it);
    acc.irrational = v;
  }
  return acc;
}

SturmSequence::SturmSequence(const ZPoly& p) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "Sturm sequence of zero");
  seq_.push_back(p);
  if (p.degree() == 0) return;
  seq_.push_back(p.derivative());
  while (true) {
    const ZPoly& a = seq_[seq_.size() - 2];
    const ZPoly& b = seq_.back();
    if (b.degree() <= 0) break;
    ZPoly r = pseudo_remainder(a, b);
    // prem multiplies by lc(b)^(da-db+1); undo a negative sign so that the
    // sequence stays a true (scaled) Sturm chain.
    const long e = a.degree() - b.degree() + 1;
    if (b.lc() < 0 && (e & 1)) r = -r;
    if (r.is_zero()) break;
    BigInt c = r.content();
    seq_.push_back(-r.divexact(c));
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int SturmSequence::variations_at(const BigRational& x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(sgn(p.eval(x)));
  return count_variations(s);
}

int SturmSequence::variations_at(const QuadraticPoint& x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(sign(eval(p, x)));
  return count_variations(s);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(sgn(p.lc()));
  return count_variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back((p.degree() & 1) ? -sgn(p.lc()) : sgn(p.lc()));
  return count_variations(s);
}

int SturmSequence::count_in(const BigRational& lo, const BigRational& hi) const {
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_real() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

}  // namespace weilden
