#include "weilden/validate.hpp"

#include <cmath>
#include <set>

#include "weilden/error.hpp"
#include "weilden/localdensity.hpp"
#include "weilden/primes.hpp"

namespace weilden {

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Failed: return "failed";
    case Status::Assumed: return "assumed";
    case Status::Probable: return "probable";
    case Status::Unverified: return "unverified";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  for (Status st : {Status::Verified, Status::Failed, Status::Assumed, Status::Probable, Status::Unverified}) {
    if (to_string(st) == s) return st;
  }
  raise(ErrorCode::ParseError, "unknown status '" + s + "'");
}

bool ValidationReport::any_failed() const {
  return ordinary == Status::Failed || cyclic_galois == Status::Failed || maximal == Status::Failed ||
         principally_polarizable == Status::Failed;
}

bool ValidationReport::usable() const {
  return ordinary == Status::Verified &&
         (cyclic_galois == Status::Probable || cyclic_galois == Status::Verified) &&
         (maximal == Status::Verified || (maximal == Status::Unverified && maximal_overridden));
}

bool dedekind_maximal_at(const ZPoly& f, std::uint64_t ell) {
  const FFPoly fbar = FFPoly::reduce(f, ell);
  const Factorization fs = factor(fbar);
  FFPoly radical = FFPoly::constant(1, ell);
  for (const auto& fp : fs.factors) radical = radical * fp.factor;
  const FFPoly cofactor = fbar / radical;
  const auto lift = [](const FFPoly& p) {
    std::vector<BigInt> c;
    for (auto v : p.ascending()) c.emplace_back(static_cast<unsigned long>(v));
    return ZPoly(std::move(c));
  };
  const ZPoly diff = lift(radical) * lift(cofactor) - f;
  const ZPoly F = diff.divexact(BigInt(static_cast<unsigned long>(ell)));
  const FFPoly Fbar = FFPoly::reduce(F, ell);
  return gcd(gcd(Fbar, radical), cofactor).degree() == 0;
}

ValidationReport validate_conditions(const WeilPolynomial& f, std::uint64_t prime_bound, bool maximal_override) {
  ValidationReport rep;
  rep.maximal_overridden = maximal_override;
  const unsigned g = f.g();
  const std::uint64_t p = f.p().get_ui();

  if (mpz_divisible_p(f.c(g).get_mpz_t(), f.p().get_mpz_t())) {
    rep.ordinary = Status::Failed;
    rep.notes.push_back("p = " + f.p().get_str() + " divides the middle coefficient " + f.c(g).get_str());
  } else {
    rep.ordinary = Status::Verified;
  }

  const BigInt disc = discriminant(f.poly());
  if (disc == 0) {
    rep.cyclic_galois = Status::Failed;
    rep.maximal = Status::Failed;
    rep.notes.push_back("f has a repeated root, so it is reducible");
    return rep;
  }
  BigInt delta;
  try {
    delta = order_discriminant(f);
  } catch (const Error& e) {
    rep.cyclic_galois = Status::Failed;
    rep.maximal = Status::Failed;
    rep.notes.push_back(e.what());
    return rep;
  }
  bool p_ramified = mpz_divisible_p(delta.get_mpz_t(), f.p().get_mpz_t()) != 0;
  if (p_ramified) rep.notes.push_back("p divides disc(f)/q^(g(g-1)): p may ramify");

  // Cyclic Galois screening.
  if (!density_supported(g)) {
    rep.cyclic_galois = Status::Unverified;
    rep.notes.push_back("g = " + std::to_string(g) + " is not an odd prime: shape screening skipped");
  } else {
    std::set<unsigned> proper_degrees;
    for (unsigned d = 1; d < 2 * g; ++d) proper_degrees.insert(d);
    bool failed = p_ramified;
    for (std::uint64_t ell : primes_below(prime_bound)) {
      if (ell == p || mpz_divisible_ui_p(delta.get_mpz_t(), ell)) continue;
      const Factorization fs = factor_mod(f, ell);
      try {
        classify_shape(fs, g, mpz_fdiv_ui(f.q().get_mpz_t(), ell));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotRelevant) throw;
        failed = true;
        rep.notes.push_back("ell = " + std::to_string(ell) + ": " + e.detail());
        break;
      }
      ++rep.primes_tested;
      // Degrees of proper factors over Q must be subset sums mod every ell.
      std::set<unsigned> sums{0};
      for (const auto& fp : fs.factors) {
        std::set<unsigned> next = sums;
        for (unsigned s : sums) next.insert(s + static_cast<unsigned>(fp.factor.degree()));
        sums = std::move(next);
      }
      std::set<unsigned> kept;
      for (unsigned d : proper_degrees) {
        if (sums.count(d)) kept.insert(d);
      }
      proper_degrees = std::move(kept);
    }
    if (failed) {
      rep.cyclic_galois = Status::Failed;
    } else if (!proper_degrees.empty() || rep.primes_tested == 0) {
      rep.cyclic_galois = Status::Unverified;
      rep.notes.push_back("irreducibility over Q not established by the screened primes");
    } else {
      rep.cyclic_galois = Status::Probable;
      rep.cyclic_confidence = 1.0 - std::pow(0.75, static_cast<double>(rep.primes_tested));
    }
  }

  // Maximality of Z[pi, pi-bar]: squarefree discriminant, else Dedekind at
  // every prime whose square divides it.
  const PartialFactorization pf = factor_partially(delta);
  if (squarefree_status(pf) == Squarefree::Yes) {
    rep.maximal = Status::Verified;
  } else if (!pf.complete) {
    rep.maximal = Status::Unverified;
    rep.notes.push_back("disc(f)/q^(g(g-1)) has an unfactored cofactor " + pf.cofactor.get_str());
  } else {
    rep.maximal = Status::Verified;
    for (const auto& pe : pf.factors) {
      if (pe.exponent < 2) continue;
      if (!pe.prime.fits_ulong_p()) {
        rep.maximal = Status::Unverified;
        rep.notes.push_back("prime " + pe.prime.get_str() + " too large for the Dedekind test");
        continue;
      }
      const std::uint64_t ell = pe.prime.get_ui();
      if (ell == p) {
        rep.maximal = Status::Unverified;
        rep.notes.push_back("p^2 divides disc(f)/q^(g(g-1))");
        continue;
      }
      if (!dedekind_maximal_at(f.poly(), ell)) {
        rep.maximal = Status::Failed;
        rep.notes.push_back("Z[pi, pi-bar] is not maximal at " + std::to_string(ell));
        break;
      }
    }
  }
  return rep;
}

}  // namespace weilden
