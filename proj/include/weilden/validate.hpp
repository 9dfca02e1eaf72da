#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilden/weilpoly.hpp"

namespace weilden {

enum class Status { Verified, Failed, Assumed, Probable, Unverified };

std::string to_string(Status s);
Status parse_status(const std::string& s);

/// Checkable status of the four standing hypotheses on f: ordinary,
/// principally polarizable, cyclic Galois, maximal order.
struct ValidationReport {
  Status ordinary = Status::Unverified;
  Status principally_polarizable = Status::Assumed;
  Status cyclic_galois = Status::Unverified;
  /// 1 - (3/4)^(primes tested); a heuristic, meaningful only when probable.
  double cyclic_confidence = 0.0;
  Status maximal = Status::Unverified;
  /// Set when the caller vouches for maximality that the test could not show.
  bool maximal_overridden = false;
  std::uint64_t primes_tested = 0;
  std::vector<std::string> notes;

  bool any_failed() const;
  /// Ordinary verified, cyclic at least probable, maximal verified or overridden.
  bool usable() const;
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

ValidationReport validate_conditions(const WeilPolynomial& f, std::uint64_t prime_bound = 200,
                                     bool maximal_override = false);

/// Dedekind's criterion: is Z[x]/(f) maximal at ell?
bool dedekind_maximal_at(const ZPoly& f, std::uint64_t ell);

}  // namespace weilden
