#include "weilden/localdensity.hpp"

#include <map>

#include "weilden/error.hpp"
#include "weilden/primes.hpp"

namespace weilden {

std::string shape_label(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Split: return "[1]_1...[1]_2g";
    case ShapeKind::QuadraticPairs: return "[2]_1...[2]_g";
    case ShapeKind::DegreeGPair: return "[g]_1[g]_2";
    case ShapeKind::Irreducible: return "[2g]";
    case ShapeKind::RamifiedLinear: return "[1]^2g";
    case ShapeKind::RamifiedPair: return "[1]_1^g[1]_2^g";
    case ShapeKind::RamifiedQuadratic: return "[2]^g";
  }
  return "?";
}

std::string shape_label(ShapeKind kind, unsigned g) {
  const std::string G = std::to_string(g);
  const std::string G2 = std::to_string(2 * g);
  switch (kind) {
    case ShapeKind::Split: return "[1]_1...[1]_" + G2;
    case ShapeKind::QuadraticPairs: return "[2]_1...[2]_" + G;
    case ShapeKind::DegreeGPair: return "[" + G + "]_1[" + G + "]_2";
    case ShapeKind::Irreducible: return "[" + G2 + "]";
    case ShapeKind::RamifiedLinear: return "[1]^" + G2;
    case ShapeKind::RamifiedPair: return "[1]_1^" + G + "[1]_2^" + G;
    case ShapeKind::RamifiedQuadratic: return "[2]^" + G;
  }
  return "?";
}

ShapeKind parse_shape(const std::string& text) {
  for (ShapeKind k : kAllShapes) {
    if (shape_label(k) == text) return k;
  }
  static const std::map<std::string, ShapeKind> aliases = {
      {"split", ShapeKind::Split},
      {"quadratic-pairs", ShapeKind::QuadraticPairs},
      {"degree-g-pair", ShapeKind::DegreeGPair},
      {"irreducible", ShapeKind::Irreducible},
      {"ramified-linear", ShapeKind::RamifiedLinear},
      {"ramified-pair", ShapeKind::RamifiedPair},
      {"ramified-quadratic", ShapeKind::RamifiedQuadratic},
  };
  auto it = aliases.find(text);
  if (it == aliases.end()) raise(ErrorCode::ParseError, "unknown shape '" + text + "'");
  return it->second;
}

bool is_semisimple(ShapeKind kind) {
  return kind == ShapeKind::Split || kind == ShapeKind::QuadraticPairs || kind == ShapeKind::DegreeGPair ||
         kind == ShapeKind::Irreducible;
}

bool density_supported(unsigned g) { return g == 1 || (g % 2 == 1 && is_prime(std::uint64_t{g})); }

ClassShape make_shape(ShapeKind kind, unsigned g) {
  switch (kind) {
    case ShapeKind::Split: return {kind, 1, 1, 2 * g};
    case ShapeKind::QuadraticPairs: return {kind, 1, 2, g};
    case ShapeKind::DegreeGPair: return {kind, 1, g, 2};
    case ShapeKind::Irreducible: return {kind, 1, 2 * g, 1};
    case ShapeKind::RamifiedLinear: return {kind, 2 * g, 1, 1};
    case ShapeKind::RamifiedPair: return {kind, g, 1, 2};
    case ShapeKind::RamifiedQuadratic: return {kind, g, 2, 1};
  }
  raise(ErrorCode::InvalidArgument, "unknown shape");
}

Factorization factor_mod(const WeilPolynomial& f, std::uint64_t ell, std::uint64_t seed) {
  if (!is_prime(ell)) raise(ErrorCode::InvalidArgument, std::to_string(ell) + " is not prime");
  return factor(FFPoly::reduce(f.poly(), ell), seed);
}

namespace {

std::string describe(const Factorization& fs) {
  std::string s;
  for (const auto& fp : fs.factors) {
    s += "[" + std::to_string(fp.factor.degree()) + "]";
    if (fp.multiplicity > 1) s += "^" + std::to_string(fp.multiplicity);
  }
  return s;
}

}  // namespace

ClassShape classify_shape(const Factorization& fs, unsigned g, std::optional<std::uint64_t> multiplier) {
  if (!density_supported(g)) {
    raise(ErrorCode::InvalidArgument, "g = " + std::to_string(g) + " is neither 1 nor an odd prime");
  }
  if (fs.factors.empty()) raise(ErrorCode::NotRelevant, "empty factorization");
  const long d = fs.factors.front().factor.degree();
  const unsigned e = fs.factors.front().multiplicity;
  long total = 0;
  for (const auto& fp : fs.factors) {
    if (fp.factor.degree() != d || fp.multiplicity != e) {
      raise(ErrorCode::NotRelevant, describe(fs) + ": factor degrees or multiplicities differ");
    }
    total += fp.factor.degree() * fp.multiplicity;
  }
  if (total != 2 * static_cast<long>(g)) {
    raise(ErrorCode::NotRelevant, describe(fs) + ": total degree is not 2g");
  }
  const auto r = static_cast<unsigned>(fs.factors.size());
  const auto fd = static_cast<unsigned>(d);
  for (ShapeKind k : kAllShapes) {
    if (g == 1 && !(k == ShapeKind::Split || k == ShapeKind::Irreducible || k == ShapeKind::RamifiedLinear)) {
      continue;
    }
    const ClassShape s = make_shape(k, g);
    if (s.e == e && s.f_res == fd && s.r == r) {
      if (k == ShapeKind::QuadraticPairs && multiplier) {
        for (const auto& fp : fs.factors) {
          if (fp.factor.coeff(0) != *multiplier % fp.factor.modulus()) {
            raise(ErrorCode::NotRelevant, describe(fs) + ": quadratic " + fp.factor.to_string() +
                                              " is not self-dual for multiplier " + std::to_string(*multiplier));
          }
        }
      }
      return s;
    }
  }
  if (e == 2 && r == 1) {
    raise(ErrorCode::NotRelevant, describe(fs) + ": square of an odd-degree irreducible (no odd-degree beta polynomials)");
  }
  if (e == 2 && fd == 1) {
    raise(ErrorCode::NotRelevant, describe(fs) + ": odd number of squared linear factors (Galois action not transitive)");
  }
  raise(ErrorCode::NotRelevant, describe(fs));
}

BigInt centralizer_order(ShapeKind kind, std::uint64_t ell, unsigned g) {
  const BigInt l(static_cast<unsigned long>(ell));
  switch (kind) {
    case ShapeKind::Split: return pow(l - 1, g + 1);
    case ShapeKind::QuadraticPairs: return (l * l - 1) * pow(l + 1, g - 1);
    case ShapeKind::DegreeGPair: return (pow(l, g) - 1) * (l - 1);
    case ShapeKind::Irreducible: return (pow(l, g) + 1) * (l - 1);
    default: break;
  }
  if (g == 1 && kind == ShapeKind::RamifiedLinear) return l * (l - 1);
  if (g != 3) {
    raise(ErrorCode::UnsupportedNonSemisimple,
          shape_label(kind, g) + " for g = " + std::to_string(g) + ": no closed form beyond g = 3");
  }
  switch (kind) {
    case ShapeKind::RamifiedLinear: return l * l * l * (l - 1);
    case ShapeKind::RamifiedPair: return l * l * (l - 1) * (l - 1);
    case ShapeKind::RamifiedQuadratic: return l * l * (l * l - 1);
    default: break;
  }
  raise(ErrorCode::InvalidArgument, "unreachable shape");
}

CharacterPair chi_values(ShapeKind kind, unsigned g) {
  switch (kind) {
    case ShapeKind::Split: return {false, 0, 1};
    case ShapeKind::QuadraticPairs: return {false, g % (2 * g), -1};
    case ShapeKind::DegreeGPair: return {false, 2 % (2 * g), 1};
    case ShapeKind::Irreducible: return {false, 1, -1};
    case ShapeKind::RamifiedLinear: return {true, 0, 0};
    case ShapeKind::RamifiedPair: return {true, 0, 1};
    case ShapeKind::RamifiedQuadratic: return {true, 0, -1};
  }
  raise(ErrorCode::InvalidArgument, "unknown shape");
}

namespace {

ZPoly cyclotomic(unsigned n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  ZPoly p = ZPoly::monomial(1, n) - ZPoly::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic(d));
  }
  return p;
}

}  // namespace

BigRational nu_ell_K(const CharacterPair& chi, std::uint64_t ell, unsigned g) {
  const unsigned n = 2 * g;
  const BigInt l(static_cast<unsigned long>(ell));
  const ZPoly phi = cyclotomic(n);
  // Denominator prod (ell - chi^i(ell)) as an element of Z[x]/Phi_2g.
  ZPoly den = ZPoly::constant(1);
  for (unsigned i = 1; i < n; i += 2) {
    ZPoly factor;
    if (i == g) {
      factor = ZPoly::constant(l - chi.chi_g);
    } else if (chi.chi_zero) {
      factor = ZPoly::constant(l);
    } else {
      factor = ZPoly::constant(l) - ZPoly::monomial(1, (chi.chi_exponent * i) % n);
    }
    den = pseudo_remainder(den * factor, phi);
  }
  if (den.degree() > 0) {
    raise(ErrorCode::InvalidArgument, "character product is not rational: " + den.to_string());
  }
  BigRational out(pow(l, g), den.coeff(0));
  out.canonicalize();
  return out;
}

BigRational nu_ell_K(ShapeKind kind, std::uint64_t ell, unsigned g) { return nu_ell_K(chi_values(kind, g), ell, g); }

LocalFactor nu_ell(const WeilPolynomial& f, std::uint64_t ell, std::uint64_t seed) {
  return nu_ell(f, ell, centralizer_order, seed);
}

LocalFactor nu_ell(const WeilPolynomial& f, std::uint64_t ell, const CentralizerTable& table, std::uint64_t seed) {
  const unsigned g = f.g();
  if (!density_supported(g)) {
    raise(ErrorCode::InvalidArgument, "density pipeline needs g = 1 or an odd prime, got " + std::to_string(g));
  }
  if (f.p() == ell) raise(ErrorCode::EqualsP, "ell = p = " + std::to_string(ell) + "; use nu_p");
  const Factorization fs = factor_mod(f, ell, seed);
  // The constant term is q^g by symmetry; the multiplier enters only through
  // the orbit-stabilizer normalisation below.
  if (FFPoly::reduce(ZPoly::constant(pow(f.q(), g)), ell).coeff(0) != FFPoly::reduce(f.poly(), ell).coeff(0)) {
    raise(ErrorCode::InvalidArgument, "constant term is not q^g mod ell");
  }
  const std::uint64_t q_mod = mpz_fdiv_ui(f.q().get_mpz_t(), ell);
  LocalFactor lf;
  lf.ell = ell;
  lf.shape = classify_shape(fs, g, q_mod);
  const BigInt l(static_cast<unsigned long>(ell));
  lf.nu_f = BigRational(pow(l, g) * (l - 1), table(lf.shape.kind, ell, g));
  lf.nu_f.canonicalize();
  lf.nu_K = nu_ell_K(lf.shape.kind, ell, g);
  lf.matched = lf.nu_f == lf.nu_K;
  return lf;
}

BigRational nu_p(const WeilPolynomial& f, std::uint64_t seed) {
  const unsigned g = f.g();
  if (!f.p().fits_ulong_p()) raise(ErrorCode::InvalidArgument, "p too large");
  const std::uint64_t p = f.p().get_ui();
  if (mpz_divisible_ui_p(f.c(g).get_mpz_t(), p)) {
    raise(ErrorCode::NotOrdinary, "p divides the middle coefficient " + f.c(g).get_str());
  }
  // g_X(T) = T^g + c_1 T^(g-1) + ... + c_g
  std::vector<BigInt> unit_root(f.coeffs().begin(), f.coeffs().begin() + g + 1);
  const Factorization fs = factor(FFPoly::reduce(ZPoly::from_descending(unit_root), p), seed);
  const BigInt P(static_cast<unsigned long>(p));
  bool split = fs.factors.size() == g && !fs.ramified;
  for (const auto& fp : fs.factors) split = split && fp.factor.degree() == 1;
  if (split) {
    BigRational r(pow(P, g), pow(P - 1, g));
    r.canonicalize();
    return r;
  }
  if (fs.factors.size() == 1 && fs.factors.front().multiplicity == 1) {
    BigRational r(pow(P, g), pow(P, g) - 1);
    r.canonicalize();
    return r;
  }
  std::string desc;
  for (const auto& fp : fs.factors) {
    desc += "(" + fp.factor.to_string() + ")";
    if (fp.multiplicity > 1) desc += "^" + std::to_string(fp.multiplicity);
  }
  raise(ErrorCode::UnexpectedPFactorization, "unit-root factor mod p = " + desc);
}

bool match_check(const WeilPolynomial& f, std::uint64_t ell, std::uint64_t seed) {
  return nu_ell(f, ell, seed).matched;
}

}  // namespace weilden
