#include "weilden/weilpoly.hpp"

#include <algorithm>
#include <sstream>

#include "weilden/error.hpp"
#include "weilden/primes.hpp"

namespace weilden {

std::string WeilPolynomial::to_string() const { return poly_.to_string("T"); }

std::vector<BigInt> parse_coefficient_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(item));
  if (out.empty()) raise(ErrorCode::ParseError, "empty coefficient list");
  return out;
}

std::string format_coefficient_list(const std::vector<BigInt>& coeffs) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += coeffs[i].get_str();
  }
  return s;
}

namespace {

/// D_0..D_g with D_k(x, q) = T^k + q^k T^-k expressed in x = T + q/T.
std::vector<ZPoly> dickson_table(unsigned g, const BigInt& q) {
  std::vector<ZPoly> d;
  d.push_back(ZPoly::constant(2));
  d.push_back(ZPoly::x());
  for (unsigned k = 2; k <= g; ++k) d.push_back(ZPoly::x() * d[k - 1] - d[k - 2] * q);
  return d;
}

ZPoly dickson_real(const std::vector<BigInt>& c, unsigned g, const BigInt& q) {
  const auto d = dickson_table(g, q);
  ZPoly fplus = ZPoly::constant(c[g]);
  for (unsigned i = 0; i < g; ++i) fplus += d[g - i] * c[i];
  return fplus;
}

void certify_roots_on_circle(const ZPoly& fplus, const BigInt& q) {
  const ZPoly sqf = squarefree_part(fplus);
  const SturmSequence sturm(sqf);
  const int real_roots = sturm.count_real();
  if (real_roots != sqf.degree()) {
    raise(ErrorCode::RootsOffCircle,
          "f+ has " + std::to_string(sqf.degree() - real_roots) + " non-real distinct roots");
  }
  const QuadraticPoint upper{0, 2, q};
  const QuadraticPoint lower{0, -2, q};
  const int above = sturm.variations_at(upper) - sturm.variations_at_pos_inf();
  int below = sturm.variations_at_neg_inf() - sturm.variations_at(lower);
  if (sign(eval(sqf, lower)) == 0) --below;  // (-inf, -2 sqrt q] counted the endpoint
  if (above != 0 || below != 0) {
    raise(ErrorCode::RootsOffCircle, "f+ has " + std::to_string(above + below) +
                                         " real roots outside [-2 sqrt(q), 2 sqrt(q)]");
  }
}

}  // namespace

WeilPolynomial parse_weil(const std::vector<BigInt>& descending, const BigInt& q) {
  if (q < 2) raise(ErrorCode::NotPrimePower, "q = " + q.get_str());
  auto pp = as_prime_power(q);
  if (!pp) raise(ErrorCode::NotPrimePower, "q = " + q.get_str());
  if (descending.empty()) raise(ErrorCode::InvalidArgument, "empty coefficient list");
  if (descending.front() != 1) raise(ErrorCode::NotMonic, "leading coefficient " + descending.front().get_str());
  const std::size_t n = descending.size() - 1;
  if (n % 2 != 0) raise(ErrorCode::OddDegree, "degree " + std::to_string(n));
  if (n == 0) raise(ErrorCode::InvalidArgument, "degree 0");
  const unsigned g = static_cast<unsigned>(n / 2);

  const ZPoly poly = ZPoly::from_descending(descending);
  for (unsigned i = 0; i < g; ++i) {
    if (poly.coeff(i) != pow(q, g - i) * poly.coeff(2 * g - i)) {
      raise(ErrorCode::SymmetryViolation, "index " + std::to_string(i) + ": coefficient of T^" +
                                              std::to_string(i) + " is not q^" + std::to_string(g - i) +
                                              " times that of T^" + std::to_string(2 * g - i));
    }
  }
  const ZPoly fplus = dickson_real(descending, g, q);
  if (expand_from_real(fplus, q) != poly) {
    raise(ErrorCode::SymmetryViolation, "re-expansion of f+ does not reproduce f");
  }
  certify_roots_on_circle(fplus, q);

  WeilPolynomial f;
  f.coeffs_ = descending;
  f.q_ = q;
  f.p_ = pp->p;
  f.a_ = pp->a;
  f.g_ = g;
  f.poly_ = poly;
  return f;
}

WeilPolynomial parse_weil(const std::string& comma_separated, const BigInt& q) {
  return parse_weil(parse_coefficient_list(comma_separated), q);
}

RealWeilPolynomial real_weil(const WeilPolynomial& f) {
  return {dickson_real(f.coeffs(), f.g(), f.q()).descending(), f.q()};
}

ZPoly expand_from_real(const ZPoly& fplus, const BigInt& q) {
  const long g = fplus.degree();
  if (g < 0) return {};
  // T^g (T + q/T)^j = (T^2 + q)^j T^(g-j)
  const ZPoly quad = ZPoly::monomial(1, 2) + ZPoly::constant(q);
  ZPoly power = ZPoly::constant(1);
  ZPoly out;
  for (long j = 0; j <= g; ++j) {
    out += power * ZPoly::monomial(fplus.coeff(static_cast<std::size_t>(j)), static_cast<std::size_t>(g - j));
    power = power * quad;
  }
  return out;
}

BigInt order_discriminant(const WeilPolynomial& f) {
  const unsigned g = f.g();
  const BigInt disc = discriminant(f.poly());
  const BigInt scale = pow(f.q(), g * (g - 1));
  if (!mpz_divisible_p(disc.get_mpz_t(), scale.get_mpz_t())) {
    raise(ErrorCode::ConductorCrossCheckFailed,
          "q^(g(g-1)) does not divide disc(f) = " + disc.get_str());
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), disc.get_mpz_t(), scale.get_mpz_t());
  return out;
}

BigInt conductor(const WeilPolynomial& f) {
  const unsigned g = f.g();
  BigInt cond = pow(f.q(), g * (g - 1) / 2);
  const BigInt delta = order_discriminant(f);
  if (cond * cond * delta != discriminant(f.poly())) {
    raise(ErrorCode::ConductorCrossCheckFailed, "disc(f) != cond^2 * Delta");
  }
  return cond;
}

namespace {

struct SquarefreeFactor {
  ZPoly factor;
  unsigned multiplicity;
};

std::vector<SquarefreeFactor> yun(const ZPoly& f) {
  std::vector<SquarefreeFactor> out;
  ZPoly c = gcd(f, f.derivative());
  ZPoly w = divide_exact(f.primitive_part(), c);
  unsigned i = 1;
  while (c.degree() > 0) {
    ZPoly y = gcd(w, c);
    ZPoly z = divide_exact(w, y);
    if (z.degree() > 0) out.push_back({z, i});
    w = y;
    c = divide_exact(c, y);
    ++i;
  }
  if (w.degree() > 0) out.push_back({w, i});
  return out;
}

BigRational dyadic(const Real& r) { return r.to_rational(); }

/// Isolating intervals (lo, hi] of the real roots of a squarefree polynomial
/// whose roots all lie in (-bound, bound], each of width <= 2^-width_bits.
std::vector<std::pair<BigRational, BigRational>> isolate(const ZPoly& p, const BigRational& bound,
                                                         unsigned width_bits) {
  const SturmSequence sturm(p);
  BigRational max_width(1);
  mpq_div_2exp(max_width.get_mpq_t(), max_width.get_mpq_t(), width_bits);
  std::vector<std::pair<BigRational, BigRational>> done;
  std::vector<std::tuple<BigRational, BigRational, int>> stack;
  stack.emplace_back(-bound, bound, sturm.count_in(-bound, bound));
  while (!stack.empty()) {
    auto [lo, hi, n] = stack.back();
    stack.pop_back();
    if (n == 0) continue;
    if (n == 1 && hi - lo <= max_width) {
      done.emplace_back(lo, hi);
      continue;
    }
    BigRational mid = (lo + hi) / 2;
    const int left = sturm.count_in(lo, mid);
    stack.emplace_back(lo, mid, left);
    stack.emplace_back(mid, hi, n - left);
  }
  std::sort(done.begin(), done.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return done;
}

}  // namespace

FrobeniusAngles frobenius_angles(const WeilPolynomial& f, mpfr_prec_t precision) {
  const ZPoly fplus = real_weil(f).poly();
  const mpfr_prec_t work = precision + 64;
  const long margin = 8;
  BigRational eps(1);
  mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), static_cast<unsigned long>(precision - margin));

  BigInt bound_int;
  mpz_sqrt(bound_int.get_mpz_t(), BigInt(4 * f.q()).get_mpz_t());
  const BigRational bound(bound_int + 1);
  const Real two_sqrt_q = Real(2.0, work) * sqrt(Real(f.q(), work));

  struct Root {
    Real value;
    unsigned multiplicity;
  };
  std::vector<Root> roots;
  for (const auto& [factor, mult] : yun(fplus)) {
    const SturmSequence sturm(factor);
    const ZPoly deriv = factor.derivative();
    for (const auto& [lo, hi] : isolate(factor, bound, static_cast<unsigned>(precision / 2))) {
      // Newton from the midpoint; the isolating interval is narrow enough that
      // the iteration is in its quadratic regime.
      Real x((lo + hi) / 2, work);
      for (int it = 0; it < 12; ++it) {
        const BigRational xr = dyadic(x);
        const BigRational fx = factor.eval(xr);
        const BigRational dx = deriv.eval(xr);
        if (fx == 0 || dx == 0) break;
        Real step(fx / dx, work);
        x -= step;
      }
      const BigRational xr = dyadic(x);
      if (sturm.count_in(xr - eps, xr + eps) != 1 || xr - eps < lo - (hi - lo) || xr + eps > hi + (hi - lo)) {
        // Newton wandered: keep the bisection midpoint, which the isolating
        // interval already certifies to within its width.
        x = Real((lo + hi) / 2, work);
      }
      roots.push_back({x, mult});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.value > b.value; });

  FrobeniusAngles out;
  out.root_radius = Real(eps, work);
  out.angle_error = Real(0.0, work);
  const Real one(1.0, work);
  const auto angle_of = [&](const Real& r) {
    Real c = r / two_sqrt_q;
    if (c > one) c = one;
    if (c < -one) c = -one;
    return acos(c);
  };
  for (const auto& root : roots) {
    const Real theta = angle_of(root.value);
    const Real up = angle_of(root.value - out.root_radius);
    const Real down = angle_of(root.value + out.root_radius);
    Real err = abs(up - theta);
    if (abs(theta - down) > err) err = abs(theta - down);
    if (err > out.angle_error) out.angle_error = err;
    for (unsigned k = 0; k < root.multiplicity; ++k) {
      out.angles.push_back(theta);
      out.multiplicity.push_back(root.multiplicity);
      out.real_roots.push_back(root.value);
    }
  }
  // Rounding slack of the working precision.
  Real slack(1.0, work);
  mpfr_div_2si(slack.get(), slack.get(), precision + 32, MPFR_RNDN);
  out.angle_error += slack;
  return out;
}

DiscCrossCheck disc_trig_crosscheck(const WeilPolynomial& f, mpfr_prec_t precision) {
  const FrobeniusAngles fa = frobenius_angles(f, precision);
  const mpfr_prec_t work = precision + 64;
  const unsigned g = f.g();
  Real sin_prod(1.0, work);
  Real cos_diff(1.0, work);
  std::vector<Real> cosines;
  for (const auto& t : fa.angles) {
    const Real s = sin(t);
    sin_prod *= s * s;
    cosines.push_back(cos(t));
  }
  for (unsigned k = 0; k < g; ++k) {
    for (unsigned t = k + 1; t < g; ++t) {
      const Real d = cosines[k] - cosines[t];
      cos_diff *= d * d;
    }
  }
  const Real q(f.q(), work);
  const Real two(2.0, work);
  // Part 1: (-1)^g 2^(2g^2) q^(2g^2 - g) prod sin^2 (prod (cos - cos)^2)^2
  Real trig_f = pow(two, 2L * g * g) * pow(q, 2L * g * g - g) * sin_prod * cos_diff * cos_diff;
  if (g % 2 == 1) trig_f = -trig_f;
  // Part 2: 2^(g(g-1)) q^(g(g-1)/2) prod (cos - cos)^2
  const Real trig_fplus = pow(two, static_cast<long>(g * (g - 1))) * pow(q, static_cast<long>(g * (g - 1) / 2)) * cos_diff;

  const BigInt disc_f = discriminant(f.poly());
  const BigInt disc_fplus = discriminant(real_weil(f).poly());
  DiscCrossCheck out;
  const auto rel = [&](const Real& approx, const BigInt& exact, bool& zero_flag) {
    if (exact == 0) {
      zero_flag = true;
      return approx.is_zero() ? 0.0 : abs(approx).to_double();
    }
    const Real e(exact, work);
    return (abs(approx - e) / abs(e)).to_double();
  };
  out.rel_err_f = rel(trig_f, disc_f, out.exact_zero_f);
  out.rel_err_fplus = rel(trig_fplus, disc_fplus, out.exact_zero_fplus);
  return out;
}

Real archimedean_value(const ArchimedeanComponents& c, unsigned g, mpfr_prec_t precision) {
  if (c.disc_fplus == 0 || c.cond == 0) raise(ErrorCode::InvalidArgument, "degenerate discriminant of f+");
  const mpfr_prec_t work = precision + 32;
  BigRational ratio(abs(c.disc_f), abs(c.disc_fplus));
  ratio.canonicalize();
  Real two_pi = Real::pi(work) * Real(2.0, work);
  Real v = sqrt(Real(ratio, work)) / (Real(c.cond, work) * pow(two_pi, static_cast<long>(g)));
  Real out(precision);
  mpfr_set(out.get(), v.get(), MPFR_RNDN);
  return out;
}

ArchimedeanFactor nu_infinity(const WeilPolynomial& f, mpfr_prec_t precision) {
  ArchimedeanComponents comp;
  comp.cond = conductor(f);
  comp.disc_f = discriminant(f.poly());
  comp.disc_fplus = discriminant(real_weil(f).poly());
  return {archimedean_value(comp, f.g(), precision), comp};
}

}  // namespace weilden
