#include "weilden/ffpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "weilden/error.hpp"

namespace weilden {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  if (a % m == 0) raise(ErrorCode::InvalidArgument, "inverse of zero mod " + std::to_string(m));
  return powmod(a, m - 2, m);
}

FFPoly::FFPoly(std::vector<std::uint64_t> ascending, std::uint64_t ell) : c_(std::move(ascending)), ell_(ell) {
  for (auto& c : c_) c %= ell_;
  trim();
}

FFPoly FFPoly::from_descending(const std::vector<std::uint64_t>& descending, std::uint64_t ell) {
  return FFPoly(std::vector<std::uint64_t>(descending.rbegin(), descending.rend()), ell);
}

FFPoly FFPoly::reduce(const ZPoly& p, std::uint64_t ell) {
  std::vector<std::uint64_t> c;
  c.reserve(p.ascending().size());
  BigInt r;
  for (const auto& z : p.ascending()) {
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), ell);
    c.push_back(r.get_ui());
  }
  return FFPoly(std::move(c), ell);
}

FFPoly FFPoly::constant(std::uint64_t c, std::uint64_t ell) { return FFPoly({c}, ell); }

FFPoly FFPoly::x(std::uint64_t ell) { return FFPoly({0, 1}, ell); }

void FFPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FFPoly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, ell_) + *it) % ell_;
  return acc;
}

FFPoly FFPoly::derivative() const {
  if (c_.size() <= 1) return FFPoly({}, ell_);
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mulmod(c_[i], i % ell_, ell_);
  return FFPoly(std::move(d), ell_);
}

FFPoly FFPoly::monic() const {
  if (is_zero() || lc() == 1) return *this;
  return scaled(invmod(lc(), ell_));
}

FFPoly FFPoly::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> c = c_;
  for (auto& v : c) v = mulmod(v, s, ell_);
  return FFPoly(std::move(c), ell_);
}

FFPoly& FFPoly::operator+=(const FFPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= ell_) c_[i] -= ell_;
  }
  trim();
  return *this;
}

FFPoly& FFPoly::operator-=(const FFPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + ell_ - o.c_[i]) % ell_;
  trim();
  return *this;
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  if (a.is_zero() || b.is_zero()) return FFPoly({}, a.ell_);
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a.c_[i], b.c_[j], a.ell_)) % a.ell_;
    }
  }
  return FFPoly(std::move(r), a.ell_);
}

std::string FFPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const auto c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b) {
  if (b.is_zero()) raise(ErrorCode::ZeroPolynomial, "division by zero polynomial mod ell");
  const std::uint64_t ell = a.modulus();
  if (a.degree() < b.degree()) return {FFPoly({}, ell), a};
  std::vector<std::uint64_t> r = a.ascending();
  const auto& bc = b.ascending();
  const long db = b.degree();
  const std::uint64_t inv = invmod(b.lc(), ell);
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (long dr = a.degree(); dr >= db; --dr) {
    const std::uint64_t lead = r[static_cast<std::size_t>(dr)];
    if (lead == 0) continue;
    const std::uint64_t t = mulmod(lead, inv, ell);
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    q[shift] = t;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      r[shift + j] = (r[shift + j] + ell - mulmod(t, bc[j], ell)) % ell;
    }
  }
  return {FFPoly(std::move(q), ell), FFPoly(std::move(r), ell)};
}

FFPoly operator%(const FFPoly& a, const FFPoly& b) { return divmod(a, b).second; }
FFPoly operator/(const FFPoly& a, const FFPoly& b) { return divmod(a, b).first; }

FFPoly gcd(const FFPoly& a, const FFPoly& b) {
  FFPoly x = a;
  FFPoly y = b;
  while (!y.is_zero()) {
    FFPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FFPoly powmod(const FFPoly& base, const BigInt& exponent, const FFPoly& modulus) {
  FFPoly result = FFPoly::constant(1, modulus.modulus()) % modulus;
  FFPoly b = base % modulus;
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

FFPoly powmod(const FFPoly& base, std::uint64_t exponent, const FFPoly& modulus) {
  return powmod(base, BigInt(static_cast<unsigned long>(exponent)), modulus);
}

bool canonical_less(const FFPoly& a, const FFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.descending() < b.descending();
}

FFPoly Factorization::product() const {
  if (factors.empty()) return {};
  FFPoly p = FFPoly::constant(1, factors.front().factor.modulus());
  for (const auto& fp : factors) {
    for (unsigned i = 0; i < fp.multiplicity; ++i) p = p * fp.factor;
  }
  return p;
}

namespace {

/// p-th root of a polynomial whose derivative vanishes: coefficients live on
/// multiples of ell, and x -> x^(1/ell) is the identity on F_ell.
FFPoly pth_root(const FFPoly& f) {
  const std::uint64_t ell = f.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.ascending().size(); i += ell) c.push_back(f.ascending()[i]);
  return FFPoly(std::move(c), ell);
}

void squarefree_decomposition(const FFPoly& f, unsigned scale, std::vector<std::pair<FFPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const FFPoly d = f.derivative();
  FFPoly c = gcd(f, d);
  FFPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    FFPoly y = gcd(w, c);
    FFPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_decomposition(pth_root(c), scale * static_cast<unsigned>(f.modulus()), out);
}

std::vector<std::pair<FFPoly, unsigned>> distinct_degree(FFPoly f) {
  const std::uint64_t ell = f.modulus();
  std::vector<std::pair<FFPoly, unsigned>> out;
  const FFPoly x = FFPoly::x(ell);
  FFPoly h = x % f;
  unsigned d = 0;
  while (f.degree() >= 2 * static_cast<long>(d + 1)) {
    ++d;
    h = powmod(h, ell, f);
    FFPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

FFPoly random_poly(long degree_below, std::uint64_t ell, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, ell - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree_below));
  for (auto& v : c) v = dist(rng);
  return FFPoly(std::move(c), ell);
}

void equal_degree(const FFPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FFPoly>& out) {
  if (f.degree() == static_cast<long>(d)) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t ell = f.modulus();
  BigInt half;
  if (ell != 2) {
    half = pow(BigInt(static_cast<unsigned long>(ell)), d);
    half = (half - 1) / 2;
  }
  while (true) {
    const FFPoly a = random_poly(f.degree(), ell, rng);
    if (a.degree() <= 0) continue;
    FFPoly b;
    if (ell == 2) {
      // Trace to F_2: a + a^2 + ... + a^(2^(d-1)).
      FFPoly t = a % f;
      b = t;
      for (unsigned i = 1; i < d; ++i) {
        t = (t * t) % f;
        b += t;
      }
    } else {
      b = powmod(a, half, f) - FFPoly::constant(1, ell);
    }
    const FFPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const FFPoly& f_in, std::uint64_t seed) {
  if (f_in.is_zero()) raise(ErrorCode::ZeroPolynomial, "factor(0)");
  const FFPoly f = f_in.monic();
  std::mt19937_64 rng(seed ^ (f.modulus() * 0x9e3779b97f4a7c15ULL));
  std::vector<std::pair<FFPoly, unsigned>> sqf;
  squarefree_decomposition(f, 1, sqf);

  std::map<std::vector<std::uint64_t>, FactorPower> merged;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<FFPoly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& irr : irreducibles) {
        auto key = irr.ascending();
        auto it = merged.find(key);
        if (it == merged.end()) {
          merged.emplace(std::move(key), FactorPower{irr, mult});
        } else {
          it->second.multiplicity += mult;
        }
      }
    }
  }
  Factorization out;
  for (auto& [key, fp] : merged) {
    if (fp.multiplicity > 1) out.ramified = true;
    out.factors.push_back(std::move(fp));
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
  return out;
}

bool is_irreducible(const FFPoly& f_in) {
  if (f_in.degree() <= 0) return false;
  const FFPoly f = f_in.monic();
  const std::uint64_t ell = f.modulus();
  const auto n = static_cast<unsigned>(f.degree());
  const FFPoly x = FFPoly::x(ell);
  // x^(ell^n) = x mod f, and gcd(x^(ell^(n/r)) - x, f) = 1 for prime r | n.
  std::vector<FFPoly> frob{x % f};
  for (unsigned i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), ell, f));
  if (!(frob[n] - x).is_zero() && !((frob[n] - x) % f).is_zero()) return false;
  for (unsigned r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool prime = true;
    for (unsigned k = 2; k * k <= r; ++k) prime = prime && (r % k != 0);
    if (!prime) continue;
    if (gcd(frob[n / r] - x, f).degree() > 0) return false;
  }
  return true;
}

}  // namespace weilden
