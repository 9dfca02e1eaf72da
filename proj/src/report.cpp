#include "weilden/report.hpp"

#include <algorithm>
#include <thread>

#include <fmt/format.h>

#include "weilden/error.hpp"

namespace weilden {

namespace {

Json opt_rational(const std::optional<BigRational>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }
std::optional<BigRational> opt_rational(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_rational(j.get<std::string>());
}
Json opt_integer(const std::optional<BigInt>& r) { return r ? Json(r->get_str()) : Json(nullptr); }
std::optional<BigInt> opt_integer(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_integer(j.get<std::string>());
}
Json integers(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}
std::vector<BigInt> integers(const Json& j) {
  std::vector<BigInt> v;
  for (const auto& x : j) v.push_back(parse_integer(x.get<std::string>()));
  return v;
}
std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<LocalRow> local_table(const WeilPolynomial& f, const std::vector<std::uint64_t>& ells, std::uint64_t seed,
                                  unsigned threads) {
  std::vector<std::uint64_t> sorted = ells;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<LocalRow> rows(sorted.size());
  auto one = [&](std::size_t i) {
    LocalRow& row = rows[i];
    row.ell = sorted[i];
    try {
      if (f.p() == row.ell) {
        row.shape = "p-adic";
        row.nu_f = nu_p(f, seed);
        row.status = "ok(nu_p)";
        return;
      }
      const LocalFactor lf = nu_ell(f, row.ell, seed);
      row.shape = shape_label(lf.shape.kind, f.g());
      row.nu_f = lf.nu_f;
      row.nu_K = lf.nu_K;
      row.status = lf.matched ? "ok" : "mismatch";
    } catch (const Error& e) {
      row.status = "error";
      row.error = e.what();
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) one(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < rows.size(); i += threads) one(i);
      });
    for (auto& th : pool) th.join();
  }
  return rows;
}

bool ArchimedeanReport::operator==(const ArchimedeanReport& o) const {
  if (angles.size() != o.angles.size()) return false;
  for (std::size_t i = 0; i < angles.size(); ++i)
    if (angles[i].to_hex() != o.angles[i].to_hex()) return false;
  return fplus == o.fplus && disc_f == o.disc_f && disc_fplus == o.disc_fplus && cond == o.cond &&
         order_disc == o.order_disc && nu_inf.to_hex() == o.nu_inf.to_hex() && multiplicity == o.multiplicity &&
         angle_error.to_hex() == o.angle_error.to_hex() && rel_err_f == o.rel_err_f &&
         rel_err_fplus == o.rel_err_fplus && exact_zero_f == o.exact_zero_f && exact_zero_fplus == o.exact_zero_fplus;
}

ArchimedeanReport archimedean_report(const WeilPolynomial& f, mpfr_prec_t precision) {
  ArchimedeanReport r;
  const RealWeilPolynomial fp = real_weil(f);
  r.fplus = fp.coeffs;
  const ArchimedeanFactor nu = nu_infinity(f, precision);
  r.disc_f = nu.components.disc_f;
  r.disc_fplus = nu.components.disc_fplus;
  r.cond = nu.components.cond;
  r.order_disc = order_discriminant(f);
  r.nu_inf = nu.value;
  const FrobeniusAngles fa = frobenius_angles(f, precision);
  // angles come back at the working precision; store them at the report precision
  auto rounded = [precision](const Real& x) {
    Real out(precision);
    mpfr_set(out.get(), x.get(), MPFR_RNDN);
    return out;
  };
  for (const auto& a : fa.angles) r.angles.push_back(rounded(a));
  r.multiplicity = fa.multiplicity;
  r.angle_error = rounded(fa.angle_error);
  const DiscCrossCheck cc = disc_trig_crosscheck(f, precision);
  r.rel_err_f = cc.rel_err_f;
  r.rel_err_fplus = cc.rel_err_fplus;
  r.exact_zero_f = cc.exact_zero_f;
  r.exact_zero_fplus = cc.exact_zero_fplus;
  return r;
}

CentralizerCell centralizer_cell(ShapeKind shape, std::uint64_t ell, unsigned g) {
  CentralizerCell cell;
  cell.shape = shape;
  cell.ell = ell;
  try {
    cell.formula = centralizer_order(shape, ell, g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedNonSemisimple) throw;
    cell.status = "unsupported";
    cell.note = e.what();
    return cell;
  }
  const auto sample = find_shape_sample(shape, ell, g);
  if (!sample) {
    cell.status = "absent";
    cell.note = "no charpoly of this shape over F_" + std::to_string(ell) +
                " belongs to a cyclic similitude (exhaustive over all multipliers)";
    return cell;
  }
  cell.fbar = sample->fbar.descending();
  cell.multiplier = sample->multiplier;
  try {
    cell.counted = centralizer_count(sample->rep.gamma);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    cell.status = "too-large";
    cell.note = e.what();
    return cell;
  }
  cell.status = *cell.counted == *cell.formula ? "equal" : "differ";
  return cell;
}

std::vector<CentralizerCell> centralizer_matrix(unsigned g, const std::vector<std::uint64_t>& ells) {
  std::vector<CentralizerCell> cells;
  for (ShapeKind k : kAllShapes) {
    if (g == 1 && !(k == ShapeKind::Split || k == ShapeKind::Irreducible || k == ShapeKind::RamifiedLinear)) continue;
    for (std::uint64_t ell : ells) cells.push_back(centralizer_cell(k, ell, g));
  }
  return cells;
}

bool CensusSummary::consistent() const {
  for (const auto& e : entries)
    if (e.squarefree && e.formula_centralizer && BigInt(static_cast<unsigned long>(e.count)) * *e.formula_centralizer != group_order)
      return false;
  return total == group_order;
}

CensusSummary summarize_census(const CharPolyCensus& census) {
  CensusSummary s;
  s.ell = census.ell;
  s.g = census.g;
  s.total = census.total();
  s.group_order = census.group_order;
  s.generators = census.generators;
  for (const auto& [key, count] : census.counts) {
    CensusEntry e;
    e.coeffs = key.first;
    e.multiplier = key.second;
    e.count = count;
    const auto cyc = census.cyclic_counts.find(key);
    e.cyclic_count = cyc == census.cyclic_counts.end() ? 0 : cyc->second;
    const FFPoly f(e.coeffs, census.ell);
    const Factorization fs = factor(f);
    e.squarefree = !fs.ramified;
    try {
      const ClassShape shape = classify_shape(fs, census.g, e.multiplier);
      e.shape = shape_label(shape.kind, census.g);
      e.formula_centralizer = centralizer_order(shape.kind, census.ell, census.g);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotRelevant && err.code() != ErrorCode::UnsupportedNonSemisimple) throw;
    }
    s.entries.push_back(std::move(e));
  }
  return s;
}

// ---------------------------------------------------------------------------

Json to_json(const ValidationReport& r) {
  Json j;
  j["ordinary"] = to_string(r.ordinary);
  j["principally_polarizable"] = to_string(r.principally_polarizable);
  j["cyclic_galois"] = to_string(r.cyclic_galois);
  j["cyclic_confidence"] = r.cyclic_confidence;
  j["maximal"] = to_string(r.maximal);
  j["maximal_overridden"] = r.maximal_overridden;
  j["primes_tested"] = r.primes_tested;
  j["notes"] = r.notes;
  return j;
}

ValidationReport validation_from_json(const Json& j) {
  ValidationReport r;
  r.ordinary = parse_status(j.at("ordinary").get<std::string>());
  r.principally_polarizable = parse_status(j.at("principally_polarizable").get<std::string>());
  r.cyclic_galois = parse_status(j.at("cyclic_galois").get<std::string>());
  r.cyclic_confidence = j.at("cyclic_confidence").get<double>();
  r.maximal = parse_status(j.at("maximal").get<std::string>());
  r.maximal_overridden = j.at("maximal_overridden").get<bool>();
  r.primes_tested = j.at("primes_tested").get<std::uint64_t>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

Json to_json(const LocalRow& r) {
  Json j;
  j["ell"] = r.ell;
  j["shape"] = r.shape;
  j["nu_f"] = opt_rational(r.nu_f);
  j["nu_K"] = opt_rational(r.nu_K);
  j["status"] = r.status;
  j["error"] = r.error;
  return j;
}

LocalRow local_row_from_json(const Json& j) {
  LocalRow r;
  r.ell = j.at("ell").get<std::uint64_t>();
  r.shape = j.at("shape").get<std::string>();
  r.nu_f = opt_rational(j.at("nu_f"));
  r.nu_K = opt_rational(j.at("nu_K"));
  r.status = j.at("status").get<std::string>();
  r.error = j.at("error").get<std::string>();
  return r;
}

Json to_json(const ArchimedeanReport& r) {
  Json j;
  j["fplus"] = integers(r.fplus);
  j["disc_f"] = r.disc_f.get_str();
  j["disc_fplus"] = r.disc_fplus.get_str();
  j["cond"] = r.cond.get_str();
  j["order_disc"] = r.order_disc.get_str();
  j["precision"] = r.nu_inf.precision();
  j["nu_inf"] = r.nu_inf.to_hex();
  j["nu_inf_decimal"] = r.nu_inf.to_decimal(30);
  Json angles = Json::array();
  Json decimals = Json::array();
  for (const auto& a : r.angles) {
    angles.push_back(a.to_hex());
    decimals.push_back(a.to_decimal(30));
  }
  j["angles"] = angles;
  j["angles_decimal"] = decimals;
  j["multiplicity"] = r.multiplicity;
  j["angle_error"] = r.angle_error.to_hex();
  j["rel_err_f"] = r.rel_err_f;
  j["rel_err_fplus"] = r.rel_err_fplus;
  j["exact_zero_f"] = r.exact_zero_f;
  j["exact_zero_fplus"] = r.exact_zero_fplus;
  return j;
}

ArchimedeanReport archimedean_from_json(const Json& j) {
  ArchimedeanReport r;
  const auto prec = j.at("precision").get<mpfr_prec_t>();
  r.fplus = integers(j.at("fplus"));
  r.disc_f = parse_integer(j.at("disc_f").get<std::string>());
  r.disc_fplus = parse_integer(j.at("disc_fplus").get<std::string>());
  r.cond = parse_integer(j.at("cond").get<std::string>());
  r.order_disc = parse_integer(j.at("order_disc").get<std::string>());
  r.nu_inf = Real::parse_hex(j.at("nu_inf").get<std::string>(), prec);
  for (const auto& a : j.at("angles")) r.angles.push_back(Real::parse_hex(a.get<std::string>(), prec));
  r.multiplicity = j.at("multiplicity").get<std::vector<unsigned>>();
  r.angle_error = Real::parse_hex(j.at("angle_error").get<std::string>(), prec);
  r.rel_err_f = j.at("rel_err_f").get<double>();
  r.rel_err_fplus = j.at("rel_err_fplus").get<double>();
  r.exact_zero_f = j.at("exact_zero_f").get<bool>();
  r.exact_zero_fplus = j.at("exact_zero_fplus").get<bool>();
  return r;
}

Json to_json(const ComparisonReport& r) {
  Json j;
  j["label"] = r.label;
  j["bound"] = r.bound;
  j["precision"] = r.predicted.precision();
  j["predicted"] = r.predicted.to_hex();
  j["predicted_decimal"] = r.predicted.to_decimal(20);
  j["reference"] = to_string(r.reference);
  j["rel_error"] = r.rel_error;
  j["oscillation_band"] = r.oscillation_band;
  j["band_snapshots"] = r.band_snapshots;
  return j;
}

ComparisonReport comparison_from_json(const Json& j) {
  ComparisonReport r;
  r.label = j.at("label").get<std::string>();
  r.bound = j.at("bound").get<std::uint64_t>();
  r.predicted = Real::parse_hex(j.at("predicted").get<std::string>(), j.at("precision").get<mpfr_prec_t>());
  r.reference = parse_rational(j.at("reference").get<std::string>());
  r.rel_error = j.at("rel_error").get<double>();
  r.oscillation_band = j.at("oscillation_band").get<double>();
  r.band_snapshots = j.at("band_snapshots").get<std::uint64_t>();
  return r;
}

Json to_json(const CentralizerCell& c) {
  Json j;
  j["shape"] = shape_label(c.shape);
  j["ell"] = c.ell;
  j["formula"] = opt_integer(c.formula);
  j["counted"] = opt_integer(c.counted);
  j["fbar"] = c.fbar;
  j["multiplier"] = c.multiplier;
  j["status"] = c.status;
  j["note"] = c.note;
  return j;
}

CentralizerCell centralizer_cell_from_json(const Json& j) {
  CentralizerCell c;
  c.shape = parse_shape(j.at("shape").get<std::string>());
  c.ell = j.at("ell").get<std::uint64_t>();
  c.formula = opt_integer(j.at("formula"));
  c.counted = opt_integer(j.at("counted"));
  c.fbar = j.at("fbar").get<std::vector<std::uint64_t>>();
  c.multiplier = j.at("multiplier").get<std::uint64_t>();
  c.status = j.at("status").get<std::string>();
  c.note = j.at("note").get<std::string>();
  return c;
}

Json to_json(const CensusSummary& s) {
  Json j;
  j["ell"] = s.ell;
  j["g"] = s.g;
  j["total"] = s.total;
  j["group_order"] = s.group_order.get_str();
  j["generators"] = s.generators;
  j["consistent"] = s.consistent();
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json x;
    x["coeffs"] = e.coeffs;
    x["multiplier"] = e.multiplier;
    x["count"] = e.count;
    x["cyclic_count"] = e.cyclic_count;
    x["shape"] = e.shape;
    x["squarefree"] = e.squarefree;
    x["formula_centralizer"] = opt_integer(e.formula_centralizer);
    entries.push_back(x);
  }
  j["entries"] = entries;
  return j;
}

CensusSummary census_from_json(const Json& j) {
  CensusSummary s;
  s.ell = j.at("ell").get<std::uint64_t>();
  s.g = j.at("g").get<unsigned>();
  s.total = j.at("total").get<std::uint64_t>();
  s.group_order = parse_integer(j.at("group_order").get<std::string>());
  s.generators = j.at("generators").get<std::uint64_t>();
  for (const auto& x : j.at("entries")) {
    CensusEntry e;
    e.coeffs = x.at("coeffs").get<std::vector<std::uint64_t>>();
    e.multiplier = x.at("multiplier").get<std::uint64_t>();
    e.count = x.at("count").get<std::uint64_t>();
    e.cyclic_count = x.at("cyclic_count").get<std::uint64_t>();
    e.shape = x.at("shape").get<std::string>();
    e.squarefree = x.at("squarefree").get<bool>();
    e.formula_centralizer = opt_integer(x.at("formula_centralizer"));
    s.entries.push_back(std::move(e));
  }
  return s;
}

Json to_json(const ProductCheckpoint& c) { return Json::parse(checkpoint_to_json(c)); }

// ---------------------------------------------------------------------------

std::string render_human(const ValidationReport& r) {
  std::string out;
  out += fmt::format("ordinary                 {}\n", to_string(r.ordinary));
  out += fmt::format("principally polarizable  {}\n", to_string(r.principally_polarizable));
  out += fmt::format("cyclic Galois            {}", to_string(r.cyclic_galois));
  if (r.cyclic_galois == Status::Probable)
    out += fmt::format(" (confidence {:.6f}, {} primes)", r.cyclic_confidence, r.primes_tested);
  out += "\n";
  out += fmt::format("maximal                  {}{}\n", to_string(r.maximal), r.maximal_overridden ? " (overridden)" : "");
  for (const auto& n : r.notes) out += "  note: " + n + "\n";
  return out;
}

std::string render_human(const std::vector<LocalRow>& rows) {
  std::string out = fmt::format("{:>7}  {:<16} {:>24} {:>24}  {}\n", "ell", "shape", "nu_ell(f)", "nu_ell(K)", "status");
  for (const auto& r : rows) {
    if (r.status == "error") {
      out += fmt::format("{:>7}  {}\n", r.ell, r.error);
      continue;
    }
    out += fmt::format("{:>7}  {:<16} {:>24} {:>24}  {}\n", r.ell, r.shape, r.nu_f ? to_string(*r.nu_f) : "-",
                       r.nu_K ? to_string(*r.nu_K) : "-", r.status);
  }
  return out;
}

std::string render_human(const ArchimedeanReport& r) {
  std::string out;
  out += "f+         " + ZPoly::from_descending(r.fplus).to_string("x") + "\n";
  out += "disc(f)    " + r.disc_f.get_str() + "\n";
  out += "disc(f+)   " + r.disc_fplus.get_str() + "\n";
  out += "cond(f)    " + r.cond.get_str() + "\n";
  out += "disc/q^(g(g-1))  " + r.order_disc.get_str() + "\n";
  for (std::size_t i = 0; i < r.angles.size(); ++i)
    out += fmt::format("theta_{}    {}\n", i + 1, r.angles[i].to_decimal(25));
  out += "angle error bound  " + r.angle_error.to_decimal(3) + "\n";
  out += fmt::format("trig check rel err  disc(f) {:.3e}  disc(f+) {:.3e}\n", r.rel_err_f, r.rel_err_fplus);
  out += "nu_inf     " + r.nu_inf.to_decimal(30) + "\n";
  return out;
}

std::string render_human(const ComparisonReport& r) {
  std::string out;
  out += fmt::format("label              {}\n", r.label);
  out += fmt::format("bound              {}\n", r.bound);
  out += fmt::format("predicted          {}\n", r.predicted.to_decimal(20));
  out += fmt::format("reference          {}\n", to_string(r.reference));
  out += fmt::format("relative error     {:.6e}\n", r.rel_error);
  out += fmt::format("oscillation band   {:.6e} (last {} snapshots)\n", r.oscillation_band, r.band_snapshots);
  return out;
}

std::string render_human(const std::vector<CentralizerCell>& cells, unsigned g) {
  std::string out = fmt::format("{:<18} {:>4} {:>10} {:>10}  {:<12} {}\n", "shape", "ell", "formula", "counted", "status",
                                "sample charpoly (m)");
  for (const auto& c : cells) {
    std::string sample;
    if (!c.fbar.empty()) sample = FFPoly::from_descending(c.fbar, c.ell).to_string() + fmt::format(" (m={})", c.multiplier);
    out += fmt::format("{:<18} {:>4} {:>10} {:>10}  {:<12} {}\n", shape_label(c.shape, g), c.ell,
                       c.formula ? c.formula->get_str() : "-", c.counted ? c.counted->get_str() : "-", c.status,
                       sample.empty() ? c.note : sample);
  }
  return out;
}

std::string render_human(const CensusSummary& s) {
  std::string out = fmt::format("GSp_{}(F_{}): {} elements (order formula {}), {} generators\n", 2 * s.g, s.ell, s.total,
                                s.group_order.get_str(), s.generators);
  out += fmt::format("{:<16} {:>3} {:>9} {:>9}  {:<16} {}\n", "charpoly (asc)", "m", "count", "cyclic", "shape",
                     "count * #Z");
  for (const auto& e : s.entries) {
    std::string check = "-";
    if (e.formula_centralizer)
      check = BigInt(BigInt(static_cast<unsigned long>(e.squarefree ? e.count : e.cyclic_count)) * *e.formula_centralizer)
                  .get_str();
    out += fmt::format("{:<16} {:>3} {:>9} {:>9}  {:<16} {}\n", join(e.coeffs), e.multiplier, e.count, e.cyclic_count,
                       e.shape.empty() ? "-" : e.shape, check);
  }
  out += fmt::format("consistent: {}\n", s.consistent() ? "yes" : "no");
  return out;
}

std::string render_human(const ProductCheckpoint& c) {
  std::string out;
  out += fmt::format("label        {}\n", c.label);
  out += fmt::format("bound        {}\n", c.bound);
  out += fmt::format("source       {}\n", to_string(c.source));
  out += fmt::format("product      {}\n", c.product().to_decimal(20));
  if (c.exact_product) out += fmt::format("exact        {}\n", to_string(*c.exact_product));
  for (const auto& s : c.history) out += fmt::format("  B = {:>10}  {}\n", s.bound, s.value.to_decimal(15));
  if (c.failed_prime) out += fmt::format("stopped at ell = {}: {}\n", *c.failed_prime, c.failure);
  return out;
}

}  // namespace weilden
