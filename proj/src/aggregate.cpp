#include "weilden/aggregate.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "weilden/error.hpp"
#include "weilden/localdensity.hpp"
#include "weilden/primes.hpp"

namespace weilden {

using nlohmann::json;

std::string to_string(FactorSource s) { return s == FactorSource::Centralizer ? "centralizer" : "character"; }

FactorSource parse_factor_source(const std::string& s) {
  if (s == "centralizer") return FactorSource::Centralizer;
  if (s == "character") return FactorSource::Character;
  raise(ErrorCode::ParseError, "unknown factor source '" + s + "'");
}

Real ProductCheckpoint::product() const { return exp(log_sum); }

bool ProductCheckpoint::operator==(const ProductCheckpoint& o) const {
  return label == o.label && coeffs == o.coeffs && q == o.q && source == o.source && bound == o.bound &&
         exact_cutoff == o.exact_cutoff && precision == o.precision && log_sum.to_hex() == o.log_sum.to_hex() &&
         log_compensation.to_hex() == o.log_compensation.to_hex() && exact_product == o.exact_product &&
         history == o.history && failed_prime == o.failed_prime && failure == o.failure;
}

bool is_snapshot_bound(std::uint64_t b) {
  if (b == 0) return false;
  while (b % 10 == 0) b /= 10;
  return b < 10;
}

namespace {

struct FactorResult {
  std::optional<BigRational> value;
  std::string error;
};

FactorResult local_factor(const WeilPolynomial& f, std::uint64_t ell, const ProductOptions& opt) {
  FactorResult r;
  try {
    if (f.p() == ell) {
      r.value = nu_p(f, opt.seed);
    } else {
      const LocalFactor lf = nu_ell(f, ell, opt.seed);
      r.value = opt.source == FactorSource::Centralizer ? lf.nu_f : lf.nu_K;
    }
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<FactorResult> compute_factors(const WeilPolynomial& f, const std::vector<std::uint64_t>& primes,
                                          const ProductOptions& opt) {
  std::vector<FactorResult> out(primes.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(primes.size())));
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < primes.size(); i += threads) out[i] = local_factor(f, primes[i], opt);
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return out;
}

void kahan_add(Real& sum, Real& comp, const Real& x) {
  const Real y = x - comp;
  const Real t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

}  // namespace

ProductCheckpoint partial_product(const WeilPolynomial& f, std::uint64_t B, const std::string& label,
                                  const std::optional<ProductCheckpoint>& resume, const ProductOptions& options) {
  ProductCheckpoint c;
  if (resume) {
    c = *resume;
    if (c.label != label || c.coeffs != f.coeffs() || c.q != f.q())
      raise(ErrorCode::FixtureMismatch, "checkpoint belongs to '" + c.label + "'");
    if (c.source != options.source || c.exact_cutoff != options.exact_cutoff || c.precision != options.precision)
      raise(ErrorCode::InvalidArgument, "checkpoint was produced with different product options");
    if (c.failed_prime || B <= c.bound) return c;
  } else {
    if (B < 2) raise(ErrorCode::InvalidArgument, "bound must be at least 2");
    c.label = label;
    c.coeffs = f.coeffs();
    c.q = f.q();
    c.source = options.source;
    c.exact_cutoff = options.exact_cutoff;
    c.precision = options.precision;
    c.log_sum = Real(0.0, options.precision);
    c.log_compensation = Real(0.0, options.precision);
    c.exact_product = BigRational(1);
  }

  const std::uint64_t start = c.bound;
  std::vector<std::uint64_t> snapshots;
  for (std::uint64_t s = start + 1; s <= B;) {
    if (is_snapshot_bound(s)) {
      snapshots.push_back(s);
      std::uint64_t step = 1;
      while (s % (step * 10) == 0) step *= 10;
      s += step;
    } else {
      ++s;
    }
  }
  std::size_t next_snap = 0;
  auto flush = [&](std::uint64_t upto) {
    while (next_snap < snapshots.size() && snapshots[next_snap] <= upto) {
      c.history.push_back({snapshots[next_snap], exp(c.log_sum)});
      ++next_snap;
    }
  };

  const auto primes = primes_in_range(start, B);
  constexpr std::size_t kChunk = 4096;
  for (std::size_t lo = 0; lo < primes.size(); lo += kChunk) {
    const std::vector<std::uint64_t> chunk(primes.begin() + static_cast<long>(lo),
                                           primes.begin() + static_cast<long>(std::min(primes.size(), lo + kChunk)));
    const auto factors = compute_factors(f, chunk, options);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const std::uint64_t ell = chunk[i];
      flush(ell);
      if (!factors[i].value) {
        c.failed_prime = ell;
        c.failure = factors[i].error;
        c.bound = ell;
        if (c.bound > c.exact_cutoff) c.exact_product.reset();
        return c;
      }
      const BigRational& v = *factors[i].value;
      if (c.exact_product) *c.exact_product *= v;
      const BigRational delta = (v - 1);
      kahan_add(c.log_sum, c.log_compensation, log1p(Real(delta, c.precision)));
    }
  }
  flush(B);
  c.bound = B;
  if (c.bound > c.exact_cutoff) c.exact_product.reset();
  return c;
}

std::string checkpoint_to_json(const ProductCheckpoint& c) {
  json j;
  j["version"] = ProductCheckpoint::kVersion;
  j["label"] = c.label;
  json coeffs = json::array();
  for (const auto& v : c.coeffs) coeffs.push_back(v.get_str());
  j["coeffs"] = coeffs;
  j["q"] = c.q.get_str();
  j["source"] = to_string(c.source);
  j["bound"] = c.bound;
  j["exact_cutoff"] = c.exact_cutoff;
  j["precision"] = c.precision;
  j["log_sum"] = c.log_sum.to_hex();
  j["log_compensation"] = c.log_compensation.to_hex();
  j["exact_product"] = c.exact_product ? json(to_string(*c.exact_product)) : json(nullptr);
  json hist = json::array();
  for (const auto& s : c.history) hist.push_back({{"bound", s.bound}, {"value", s.value.to_hex()}});
  j["history"] = hist;
  j["failed_prime"] = c.failed_prime ? json(*c.failed_prime) : json(nullptr);
  j["failure"] = c.failure;
  return j.dump(2);
}

ProductCheckpoint checkpoint_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    raise(ErrorCode::ParseError, std::string("checkpoint: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != ProductCheckpoint::kVersion)
      raise(ErrorCode::ParseError, "unsupported checkpoint version");
    ProductCheckpoint c;
    c.label = j.at("label").get<std::string>();
    for (const auto& v : j.at("coeffs")) c.coeffs.push_back(parse_integer(v.get<std::string>()));
    c.q = parse_integer(j.at("q").get<std::string>());
    c.source = parse_factor_source(j.at("source").get<std::string>());
    c.bound = j.at("bound").get<std::uint64_t>();
    c.exact_cutoff = j.at("exact_cutoff").get<std::uint64_t>();
    c.precision = j.at("precision").get<mpfr_prec_t>();
    c.log_sum = Real::parse_hex(j.at("log_sum").get<std::string>(), c.precision);
    c.log_compensation = Real::parse_hex(j.at("log_compensation").get<std::string>(), c.precision);
    if (!j.at("exact_product").is_null()) c.exact_product = parse_rational(j.at("exact_product").get<std::string>());
    for (const auto& s : j.at("history"))
      c.history.push_back(
          {s.at("bound").get<std::uint64_t>(), Real::parse_hex(s.at("value").get<std::string>(), c.precision)});
    if (!j.at("failed_prime").is_null()) c.failed_prime = j.at("failed_prime").get<std::uint64_t>();
    c.failure = j.at("failure").get<std::string>();
    return c;
  } catch (const json::exception& e) {
    raise(ErrorCode::ParseError, std::string("checkpoint: ") + e.what());
  }
}

void save_checkpoint(const ProductCheckpoint& c, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) raise(ErrorCode::InvalidArgument, "cannot write " + tmp);
    out << checkpoint_to_json(c) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) raise(ErrorCode::InvalidArgument, "cannot replace " + path);
}

ProductCheckpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return checkpoint_from_json(ss.str());
}

BigRational ReferenceFixture::reference() const {
  BigRational r(h_K, omega_K * h_Kplus);
  r.canonicalize();
  return r;
}

ReferenceFixture parse_fixture(const std::string& line) {
  try {
    const json j = json::parse(line);
    ReferenceFixture f;
    f.label = j.at("label").get<std::string>();
    auto as_int = [](const json& v) {
      return v.is_string() ? parse_integer(v.get<std::string>()) : BigInt(std::to_string(v.get<long long>()));
    };
    for (const auto& v : j.at("coeffs")) f.coeffs.push_back(as_int(v));
    f.q = as_int(j.at("q"));
    f.h_K = as_int(j.at("h_K"));
    f.h_Kplus = as_int(j.at("h_Kplus"));
    f.omega_K = as_int(j.at("omega_K"));
    f.provenance = j.value("provenance", "");
    if (f.h_K <= 0 || f.h_Kplus <= 0 || f.omega_K <= 0)
      raise(ErrorCode::ParseError, "fixture '" + f.label + "': class numbers and omega must be positive");
    return f;
  } catch (const json::exception& e) {
    raise(ErrorCode::ParseError, std::string("fixture: ") + e.what());
  }
}

std::string fixture_to_json(const ReferenceFixture& f) {
  json j;
  j["label"] = f.label;
  json coeffs = json::array();
  for (const auto& v : f.coeffs) coeffs.push_back(v.get_str());
  j["coeffs"] = coeffs;
  j["q"] = f.q.get_str();
  j["h_K"] = f.h_K.get_str();
  j["h_Kplus"] = f.h_Kplus.get_str();
  j["omega_K"] = f.omega_K.get_str();
  j["provenance"] = f.provenance;
  return j.dump();
}

std::vector<ReferenceFixture> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::InvalidArgument, "cannot read " + path);
  std::vector<ReferenceFixture> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    out.push_back(parse_fixture(line));
  }
  return out;
}

const ReferenceFixture& find_fixture(const std::vector<ReferenceFixture>& fixtures, const std::string& label) {
  for (const auto& f : fixtures)
    if (f.label == label) return f;
  raise(ErrorCode::FixtureMismatch, "no fixture labelled '" + label + "'");
}

double oscillation_band(const ProductCheckpoint& c, const Real& nu_inf, std::uint64_t B, std::size_t window) {
  std::vector<double> tail;
  for (const auto& s : c.history)
    if (s.bound <= B) tail.push_back((nu_inf * s.value).to_double());
  if (tail.size() > window) tail.erase(tail.begin(), tail.end() - static_cast<long>(window));
  if (tail.size() < 2) return 0.0;
  const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
  return *hi - *lo;
}

ComparisonReport compare(const WeilPolynomial& f, const ProductCheckpoint& checkpoint, const ReferenceFixture& fixture,
                         mpfr_prec_t precision) {
  if (checkpoint.label != fixture.label)
    raise(ErrorCode::FixtureMismatch, "checkpoint '" + checkpoint.label + "' vs fixture '" + fixture.label + "'");
  if (checkpoint.coeffs != f.coeffs() || checkpoint.q != f.q() || fixture.coeffs != f.coeffs() || fixture.q != f.q())
    raise(ErrorCode::FixtureMismatch, "polynomial differs between input, checkpoint and fixture '" + fixture.label + "'");
  const Real nu_inf = nu_infinity(f, precision).value;
  ComparisonReport r;
  r.label = fixture.label;
  r.bound = checkpoint.bound;
  r.predicted = nu_inf * checkpoint.product();
  r.reference = fixture.reference();
  const Real ref(r.reference, precision);
  r.rel_error = (abs(r.predicted - ref) / ref).to_double();
  r.oscillation_band = oscillation_band(checkpoint, nu_inf, checkpoint.bound);
  std::size_t n = 0;
  for (const auto& s : checkpoint.history) n += s.bound <= checkpoint.bound;
  r.band_snapshots = std::min<std::size_t>(n, 5);
  return r;
}

}  // namespace weilden
