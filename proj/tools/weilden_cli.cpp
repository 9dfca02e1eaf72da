#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weilden/aggregate.hpp"
#include "weilden/error.hpp"
#include "weilden/gsp_oracle.hpp"
#include "weilden/primes.hpp"
#include "weilden/report.hpp"
#include "weilden/validate.hpp"
#include "weilden/weilpoly.hpp"

using namespace weilden;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  std::string command;
  std::string coeffs;
  std::string q;
  std::string fixtures;
  std::string label;
  std::uint64_t validate_bound = 200;
  std::uint64_t local_bound = 1000;
  std::uint64_t ell_min = 2;
  std::string ells;
  std::string oracle_ells = "2,3,5";
  long precision = 128;
  std::uint64_t seed = 0x5eed;
  unsigned threads = 1;
  std::string checkpoint;
  std::uint64_t bound = 100000;
  std::uint64_t exact_cutoff = 10000;
  std::string source = "centralizer";
  double tolerance = 0.10;
  bool assume_maximal = false;
  unsigned g = 3;
  std::uint64_t ell = 2;
  std::uint64_t multiplier = 1;
  std::string fbar;
  std::string export_path;
  std::string format = "human";
  bool timings = false;
};

Json config_echo(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  if (!c.coeffs.empty()) j["coeffs"] = c.coeffs;
  if (!c.q.empty()) j["q"] = c.q;
  if (!c.fixtures.empty()) j["fixtures"] = c.fixtures;
  if (!c.label.empty()) j["label"] = c.label;
  if (c.command == "validate") j["prime_bound"] = c.validate_bound;
  if (c.command == "local") j["prime_bound"] = c.local_bound;
  j["precision"] = c.precision;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  if (!c.checkpoint.empty()) j["checkpoint"] = c.checkpoint;
  return j;
}

class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg), start_(std::chrono::steady_clock::now()) {}

  bool structured() const { return cfg_.format == "json" || cfg_.format == "structured"; }

  int emit(const Json& results, const std::string& human, int code) const {
    if (structured()) {
      Json out;
      out["version"] = "0.1.0";
      out["config"] = config_echo(cfg_);
      out["results"] = results;
      out["exit_code"] = code;
      Json t = Json::object();
      if (cfg_.timings)
        t["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      out["timings"] = t;
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << human;
    }
    return code;
  }

  int fail(const Error& e, int code) const {
    if (structured()) {
      Json err;
      err["code"] = std::string(to_string(e.code()));
      err["detail"] = e.detail();
      Json results;
      results["error"] = err;
      return emit(results, "", code);
    }
    std::cerr << "error: " << e.what() << '\n';
    return code;
  }

 private:
  const RunConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
};

struct Subject {
  WeilPolynomial f;
  std::string label;
  std::optional<ReferenceFixture> fixture;
};

Subject load_subject(const RunConfig& cfg) {
  if (!cfg.fixtures.empty()) {
    if (cfg.label.empty()) throw CLI::ValidationError("--label", "required with --fixtures");
    const auto all = load_fixtures(cfg.fixtures);
    const ReferenceFixture& fx = find_fixture(all, cfg.label);
    return {parse_weil(fx.coeffs, fx.q), fx.label, fx};
  }
  if (cfg.coeffs.empty()) throw CLI::RequiredError("--coeffs");
  if (cfg.q.empty()) throw CLI::RequiredError("--q");
  WeilPolynomial f = parse_weil(cfg.coeffs, parse_integer(cfg.q));
  return {f, cfg.label.empty() ? "q" + cfg.q + ":" + cfg.coeffs : cfg.label, std::nullopt};
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& v : parse_coefficient_list(text)) {
    if (v < 0 || !v.fits_ulong_p()) raise(ErrorCode::ParseError, "expected a non-negative integer, got " + v.get_str());
    out.push_back(v.get_ui());
  }
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::TooLarge:
    case ErrorCode::GenerationStalled: return kExitResource;
    case ErrorCode::ParseError: return kExitUsage;
    default: return kExitMismatch;
  }
}

int cmd_validate(const RunConfig& cfg, const Runner& run) {
  const Subject s = load_subject(cfg);
  const ValidationReport r = validate_conditions(s.f, cfg.validate_bound, cfg.assume_maximal);
  return run.emit(to_json(r), render_human(r), r.any_failed() ? kExitMismatch : kExitPass);
}

int cmd_local(const RunConfig& cfg, const Runner& run) {
  const Subject s = load_subject(cfg);
  const auto ells = cfg.ells.empty() ? primes_in_range(cfg.ell_min, cfg.local_bound) : parse_u64_list(cfg.ells);
  for (auto ell : ells)
    if (!is_prime(ell)) raise(ErrorCode::ParseError, std::to_string(ell) + " is not prime");
  const auto rows = local_table(s.f, ells, cfg.seed, cfg.threads);
  int code = kExitPass;
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(to_json(r));
    if (r.status == "mismatch") code = kExitMismatch;
    if (r.status == "error" && r.error.rfind("UnsupportedNonSemisimple", 0) != 0) code = kExitMismatch;
  }
  return run.emit(arr, render_human(rows), code);
}

int cmd_archimedean(const RunConfig& cfg, const Runner& run) {
  const Subject s = load_subject(cfg);
  const ArchimedeanReport r = archimedean_report(s.f, cfg.precision);
  return run.emit(to_json(r), render_human(r), kExitPass);
}

ProductOptions product_options(const RunConfig& cfg) {
  ProductOptions o;
  o.exact_cutoff = cfg.exact_cutoff;
  o.precision = cfg.precision;
  o.threads = cfg.threads;
  o.seed = cfg.seed;
  o.source = parse_factor_source(cfg.source);
  return o;
}

ProductCheckpoint run_product(const RunConfig& cfg, const Subject& s) {
  std::optional<ProductCheckpoint> resume;
  if (!cfg.checkpoint.empty() && std::filesystem::exists(cfg.checkpoint)) resume = load_checkpoint(cfg.checkpoint);
  ProductCheckpoint c = partial_product(s.f, cfg.bound, s.label, resume, product_options(cfg));
  if (!cfg.checkpoint.empty()) save_checkpoint(c, cfg.checkpoint);
  return c;
}

int cmd_product(const RunConfig& cfg, const Runner& run) {
  const Subject s = load_subject(cfg);
  const ProductCheckpoint c = run_product(cfg, s);
  return run.emit(to_json(c), render_human(c), c.failed_prime ? kExitMismatch : kExitPass);
}

int cmd_compare(const RunConfig& cfg, const Runner& run) {
  const Subject s = load_subject(cfg);
  if (!s.fixture) throw CLI::ValidationError("--fixtures", "compare needs a fixture file and --label");
  ProductCheckpoint c = cfg.checkpoint.empty() || !std::filesystem::exists(cfg.checkpoint)
                            ? run_product(cfg, s)
                            : load_checkpoint(cfg.checkpoint);
  if (c.bound < cfg.bound && !c.failed_prime) c = run_product(cfg, s);
  const ComparisonReport r = compare(s.f, c, *s.fixture, cfg.precision);
  return run.emit(to_json(r), render_human(r), r.rel_error < cfg.tolerance ? kExitPass : kExitMismatch);
}

int cmd_oracle_centralizers(const RunConfig& cfg, const Runner& run) {
  const auto ells = parse_u64_list(cfg.oracle_ells);
  for (auto ell : ells)
    if (!is_prime(ell)) raise(ErrorCode::ParseError, std::to_string(ell) + " is not prime");
  const auto cells = centralizer_matrix(cfg.g, ells);
  Json arr = Json::array();
  int code = kExitPass;
  for (const auto& c : cells) {
    arr.push_back(to_json(c));
    if (c.status == "too-large") code = std::max(code, kExitResource);
    else if (c.status != "equal" && code == kExitPass) code = kExitMismatch;
  }
  return run.emit(arr, render_human(cells, cfg.g), code);
}

int cmd_oracle_census(const RunConfig& cfg, const Runner& run) {
  const CharPolyCensus census = enumerate_group(cfg.g, cfg.ell, cfg.seed, cfg.threads);
  if (!cfg.export_path.empty()) {
    std::ofstream out(cfg.export_path, std::ios::trunc);
    if (!out) raise(ErrorCode::InvalidArgument, "cannot write " + cfg.export_path);
    out << census.export_lines();
  }
  const CensusSummary s = summarize_census(census);
  return run.emit(to_json(s), render_human(s), s.consistent() ? kExitPass : kExitMismatch);
}

int cmd_oracle_representative(const RunConfig& cfg, const Runner& run) {
  if (cfg.fbar.empty()) throw CLI::RequiredError("--fbar");
  const FFPoly fbar = FFPoly::from_descending(parse_u64_list(cfg.fbar), cfg.ell);
  const Representative rep = representative(fbar, cfg.multiplier);
  const auto m = similitude_multiplier(rep.gamma);
  const bool ok = m == std::optional<std::uint64_t>(cfg.multiplier % cfg.ell) && rep.gamma.charpoly() == fbar &&
                  rep.gamma.is_cyclic();
  const auto basis = commutant_basis(rep.gamma);
  Json j;
  j["gamma"] = rep.gamma.entries();
  j["form"] = rep.form.entries();
  j["n"] = rep.gamma.size();
  j["multiplier"] = m ? Json(*m) : Json(nullptr);
  j["charpoly"] = rep.gamma.charpoly().descending();
  j["cyclic"] = rep.gamma.is_cyclic();
  j["commutant_dimension"] = basis.size();
  std::string human = "gamma =\n" + rep.gamma.to_string() + "invariant form A =\n" + rep.form.to_string();
  human += "multiplier " + (m ? std::to_string(*m) : std::string("none")) + ", charpoly " +
           rep.gamma.charpoly().to_string() + ", cyclic " + (rep.gamma.is_cyclic() ? "yes" : "no") +
           ", commutant dimension " + std::to_string(basis.size()) + "\n";
  return run.emit(j, human, ok ? kExitPass : kExitMismatch);
}

void add_subject_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--coeffs", cfg.coeffs, "comma-separated coefficients, highest degree first");
  app->add_option("--q", cfg.q, "the prime power q");
  app->add_option("--fixtures", cfg.fixtures, "fixture file (one JSON object per line)");
  app->add_option("--label", cfg.label, "fixture or checkpoint label");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local densities of q-Weil polynomials and their Euler product"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "human | json")->check(CLI::IsMember({"human", "json", "structured"}));
  app.add_option("--seed", cfg.seed, "seed for randomized subroutines");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(64L, 100000L));
  app.add_flag("--timings", cfg.timings, "record wall-clock timings in structured output");

  auto* validate = app.add_subcommand("validate", "check the standing hypotheses on f");
  add_subject_options(validate, cfg);
  validate->add_option("--prime-bound", cfg.validate_bound, "screen primes below this bound")->default_val(200);
  validate->add_flag("--assume-maximal", cfg.assume_maximal, "accept maximality that could not be verified");

  auto* local = app.add_subcommand("local", "nu_ell(f) and nu_ell(K) for a range of primes");
  add_subject_options(local, cfg);
  local->add_option("--prime-bound", cfg.local_bound, "primes below this bound")->default_val(1000);
  local->add_option("--ell-min", cfg.ell_min, "smallest prime")->default_val(2);
  local->add_option("--ells", cfg.ells, "explicit comma-separated primes");

  auto* arch = app.add_subcommand("archimedean", "f+, discriminants, Frobenius angles and nu_inf");
  add_subject_options(arch, cfg);

  auto* product = app.add_subcommand("product", "truncated product over primes below a bound");
  add_subject_options(product, cfg);
  product->add_option("--bound", cfg.bound, "multiply over primes below this bound")->default_val(100000);
  product->add_option("--checkpoint", cfg.checkpoint, "checkpoint file to resume from and update");
  product->add_option("--exact-cutoff", cfg.exact_cutoff, "keep the exact product up to this bound")->default_val(10000);
  product->add_option("--source", cfg.source, "centralizer | character")
      ->check(CLI::IsMember({"centralizer", "character"}));

  auto* cmp = app.add_subcommand("compare", "compare the product with a class-number fixture");
  add_subject_options(cmp, cfg);
  cmp->add_option("--bound", cfg.bound, "product bound")->default_val(100000);
  cmp->add_option("--checkpoint", cfg.checkpoint, "checkpoint file to use or create");
  cmp->add_option("--exact-cutoff", cfg.exact_cutoff, "keep the exact product up to this bound")->default_val(10000);
  cmp->add_option("--source", cfg.source, "centralizer | character")
      ->check(CLI::IsMember({"centralizer", "character"}));
  cmp->add_option("--tolerance", cfg.tolerance, "relative error accepted for exit code 0")->default_val(0.10);

  auto* oracle = app.add_subcommand("oracle", "brute-force group computations");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  auto* cent = oracle->add_subcommand("centralizers", "formula versus enumeration for every shape");
  cent->add_option("--g", cfg.g, "half dimension")->default_val(3);
  cent->add_option("--ells", cfg.oracle_ells, "comma-separated primes")->default_val("2,3,5");
  auto* census = oracle->add_subcommand("census", "enumerate GSp_6(F_2) by characteristic polynomial");
  census->add_option("--g", cfg.g, "half dimension")->default_val(3);
  census->add_option("--ell", cfg.ell, "prime")->default_val(2);
  census->add_option("--export", cfg.export_path, "write the census lines to this file");
  auto* repr = oracle->add_subcommand("representative", "cyclic similitude with a given charpoly");
  repr->add_option("--fbar", cfg.fbar, "charpoly coefficients mod ell, highest degree first")->required();
  repr->add_option("--ell", cfg.ell, "prime")->required();
  repr->add_option("--m", cfg.multiplier, "multiplier")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  Runner run(cfg);
  try {
    if (*validate) return cfg.command = "validate", cmd_validate(cfg, run);
    if (*local) return cfg.command = "local", cmd_local(cfg, run);
    if (*arch) return cfg.command = "archimedean", cmd_archimedean(cfg, run);
    if (*product) return cfg.command = "product", cmd_product(cfg, run);
    if (*cmp) return cfg.command = "compare", cmd_compare(cfg, run);
    if (*cent) return cfg.command = "oracle centralizers", cmd_oracle_centralizers(cfg, run);
    if (*census) return cfg.command = "oracle census", cmd_oracle_census(cfg, run);
    if (*repr) return cfg.command = "oracle representative", cmd_oracle_representative(cfg, run);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    return run.fail(e, exit_code_for(e));
  }
  return kExitUsage;
}
