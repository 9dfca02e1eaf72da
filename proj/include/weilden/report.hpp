#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weilden/aggregate.hpp"
#include "weilden/gsp_oracle.hpp"
#include "weilden/localdensity.hpp"
#include "weilden/validate.hpp"
#include "weilden/weilpoly.hpp"

namespace weilden {

using Json = nlohmann::ordered_json;

/// One row of the local-factor table.
struct LocalRow {
  std::uint64_t ell = 0;
  std::string shape;  // concrete label, or "p-adic" at ell = p
  std::optional<BigRational> nu_f;
  std::optional<BigRational> nu_K;
  std::string status;  // ok | mismatch | ok(nu_p) | error
  std::string error;
  friend bool operator==(const LocalRow&, const LocalRow&) = default;
};

/// Rows for the given primes, computed in parallel and returned in ascending order.
std::vector<LocalRow> local_table(const WeilPolynomial& f, const std::vector<std::uint64_t>& ells,
                                  std::uint64_t seed = 0x5eed, unsigned threads = 1);

struct ArchimedeanReport {
  std::vector<BigInt> fplus;  // descending
  BigInt disc_f;
  BigInt disc_fplus;
  BigInt cond;
  BigInt order_disc;
  Real nu_inf{128};
  std::vector<Real> angles;
  std::vector<unsigned> multiplicity;
  Real angle_error{128};
  double rel_err_f = 0.0;
  double rel_err_fplus = 0.0;
  bool exact_zero_f = false;
  bool exact_zero_fplus = false;
  bool operator==(const ArchimedeanReport& o) const;
};

ArchimedeanReport archimedean_report(const WeilPolynomial& f, mpfr_prec_t precision = 128);

/// Formula versus enumeration for one (shape, ell) cell.
struct CentralizerCell {
  ShapeKind shape = ShapeKind::Split;
  std::uint64_t ell = 2;
  std::optional<BigInt> formula;
  std::optional<BigInt> counted;
  std::vector<std::uint64_t> fbar;  // descending
  std::uint64_t multiplier = 0;
  std::string status;  // equal | differ | absent | unsupported | too-large
  std::string note;
  friend bool operator==(const CentralizerCell&, const CentralizerCell&) = default;
};

CentralizerCell centralizer_cell(ShapeKind shape, std::uint64_t ell, unsigned g);
std::vector<CentralizerCell> centralizer_matrix(unsigned g, const std::vector<std::uint64_t>& ells);

struct CensusEntry {
  std::vector<std::uint64_t> coeffs;  // ascending mod ell
  std::uint64_t multiplier = 1;
  std::uint64_t count = 0;
  std::uint64_t cyclic_count = 0;
  std::string shape;  // empty when not relevant
  bool squarefree = false;
  std::optional<BigInt> formula_centralizer;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

struct CensusSummary {
  std::uint64_t ell = 2;
  unsigned g = 3;
  std::uint64_t total = 0;
  BigInt group_order;
  std::uint64_t generators = 0;
  std::vector<CensusEntry> entries;
  /// Every squarefree relevant entry satisfies count * #Z = group order.
  bool consistent() const;
  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

CensusSummary summarize_census(const CharPolyCensus& census);

Json to_json(const ValidationReport& r);
ValidationReport validation_from_json(const Json& j);
Json to_json(const LocalRow& r);
LocalRow local_row_from_json(const Json& j);
Json to_json(const ArchimedeanReport& r);
ArchimedeanReport archimedean_from_json(const Json& j);
Json to_json(const ComparisonReport& r);
ComparisonReport comparison_from_json(const Json& j);
Json to_json(const CentralizerCell& c);
CentralizerCell centralizer_cell_from_json(const Json& j);
Json to_json(const CensusSummary& s);
CensusSummary census_from_json(const Json& j);
Json to_json(const ProductCheckpoint& c);


std::string render_human(const ValidationReport& r);
std::string render_human(const std::vector<LocalRow>& rows);
std::string render_human(const ArchimedeanReport& r);
std::string render_human(const ComparisonReport& r);
std::string render_human(const std::vector<CentralizerCell>& cells, unsigned g);
std::string render_human(const CensusSummary& s);
std::string render_human(const ProductCheckpoint& c);

}  // namespace weilden
