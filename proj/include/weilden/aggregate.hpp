#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilden/numeric.hpp"
#include "weilden/weilpoly.hpp"

namespace weilden {

enum class FactorSource { Centralizer, Character };

std::string to_string(FactorSource s);
FactorSource parse_factor_source(const std::string& s);

struct Snapshot {
  std::uint64_t bound = 0;
  Real value;  // prod over primes < bound, without the archimedean factor
  friend bool operator==(const Snapshot& a, const Snapshot& b) {
    return a.bound == b.bound && a.value.to_hex() == b.value.to_hex();
  }
};

/// Resumable state of prod_{ell < bound} nu_ell(f).
struct ProductCheckpoint {
  static constexpr int kVersion = 1;
  std::string label;
  std::vector<BigInt> coeffs;
  BigInt q;
  FactorSource source = FactorSource::Centralizer;
  std::uint64_t bound = 2;  // every prime below this has been consumed
  std::uint64_t exact_cutoff = 10000;
  mpfr_prec_t precision = 128;
  Real log_sum{128};
  Real log_compensation{128};
  std::optional<BigRational> exact_product;  // kept while bound <= exact_cutoff
  std::vector<Snapshot> history;
  std::optional<std::uint64_t> failed_prime;
  std::string failure;

  Real product() const;
  bool operator==(const ProductCheckpoint& o) const;
};

struct ProductOptions {
  std::uint64_t exact_cutoff = 10000;
  mpfr_prec_t precision = 128;
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed;
  FactorSource source = FactorSource::Centralizer;
};

/// Bounds d * 10^k (d = 1..9) at which snapshots are taken.
bool is_snapshot_bound(std::uint64_t b);

/// Multiplies nu_ell(f) over primes ell < B in ascending order (nu_p at
/// ell = p), continuing from `resume` when given. A prime whose factor cannot
/// be computed stops the run and is recorded in the checkpoint.
ProductCheckpoint partial_product(const WeilPolynomial& f, std::uint64_t B, const std::string& label,
                                  const std::optional<ProductCheckpoint>& resume = std::nullopt,
                                  const ProductOptions& options = {});

std::string checkpoint_to_json(const ProductCheckpoint& c);
ProductCheckpoint checkpoint_from_json(const std::string& text);
void save_checkpoint(const ProductCheckpoint& c, const std::string& path);
ProductCheckpoint load_checkpoint(const std::string& path);

struct ReferenceFixture {
  std::string label;
  std::vector<BigInt> coeffs;
  BigInt q;
  BigInt h_K;
  BigInt h_Kplus;
  BigInt omega_K;
  std::string provenance;

  /// h_K / (omega_K h_K+)
  BigRational reference() const;
  friend bool operator==(const ReferenceFixture&, const ReferenceFixture&) = default;
};

/// One JSON object per line.
std::vector<ReferenceFixture> load_fixtures(const std::string& path);
ReferenceFixture parse_fixture(const std::string& json_line);
std::string fixture_to_json(const ReferenceFixture& f);
const ReferenceFixture& find_fixture(const std::vector<ReferenceFixture>& fixtures, const std::string& label);

struct ComparisonReport {
  std::string label;
  std::uint64_t bound = 0;
  Real predicted{128};
  BigRational reference;
  double rel_error = 0.0;
  double oscillation_band = 0.0;  // max - min of predicted over the last snapshots
  std::uint64_t band_snapshots = 0;
  friend bool operator==(const ComparisonReport& a, const ComparisonReport& b) {
    return a.label == b.label && a.bound == b.bound && a.predicted.to_hex() == b.predicted.to_hex() &&
           a.reference == b.reference && a.rel_error == b.rel_error && a.oscillation_band == b.oscillation_band &&
           a.band_snapshots == b.band_snapshots;
  }
};

/// Oscillation band over the last `window` snapshots with bound <= B.
double oscillation_band(const ProductCheckpoint& c, const Real& nu_inf, std::uint64_t B, std::size_t window = 5);

/// Throws FixtureMismatch if labels or polynomials disagree.
ComparisonReport compare(const WeilPolynomial& f, const ProductCheckpoint& checkpoint, const ReferenceFixture& fixture,
                         mpfr_prec_t precision = 128);

}  // namespace weilden
