// Acceptance checks. Usage: acceptance [N...]; prints one line per criterion.
#include <sys/resource.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "oracles.hpp"
#include "properties.hpp"
#include "weilden/aggregate.hpp"
#include "weilden/error.hpp"
#include "weilden/gsp_oracle.hpp"
#include "weilden/localdensity.hpp"
#include "weilden/primes.hpp"
#include "weilden/report.hpp"
#include "weilden/validate.hpp"
#include "weilden/weilpoly.hpp"

using namespace weilden;

namespace {

enum class Verdict { Pass, Fail, Review };

struct Result {
  Verdict verdict;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

unsigned worker_count() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

const std::vector<BigInt> kSextic{1, 10, 48, 151, 336, 490, 343};
const std::vector<BigInt> kGenusFive{1, -2, 9, -20, 40, -86, 120, -180, 243, -162, 243};

Result centralizer_matrix_check() {
  const auto t0 = Clock::now();
  const auto cells = centralizer_matrix(3, {2, 3, 5});
  std::map<std::string, int> by_status;
  std::string odd;
  for (const auto& c : cells) {
    ++by_status[c.status];
    if (c.status != "equal")
      odd += fmt::format(" {}@{}={}", shape_label(c.shape, 3), c.ell,
                         c.status == "differ" ? c.counted->get_str() + "vs" + c.formula->get_str() : c.status);
  }
  const double secs = seconds_since(t0);
  const bool ok = cells.size() == 21 && by_status["equal"] == 21 && secs < 120;
  return {ok ? Verdict::Pass : Verdict::Fail,
          fmt::format("{}/21 equal, {} absent, {} differ ({:.1f}s){}", by_status["equal"], by_status["absent"],
                      by_status["differ"], secs, odd)};
}

Result census_check() {
  const auto t0 = Clock::now();
  const CharPolyCensus c = enumerate_group(3, 2, 1, worker_count());
  const double secs = seconds_since(t0);
  const CensusSummary s = summarize_census(c);
  const std::uint64_t target = c.count(FFPoly::from_descending({1, 0, 0, 1, 0, 0, 1}, 2), 1);
  int squarefree_checked = 0;
  for (const auto& e : s.entries) squarefree_checked += e.squarefree && e.formula_centralizer.has_value();
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  const double mem_mb = static_cast<double>(ru.ru_maxrss) / 1024.0;
  const bool ok = c.total() == 1451520 && oracle::gsp_order(3, 2) == 1451520 && s.consistent() && target == 161280 &&
                  secs < 600 && mem_mb < 1024;
  return {ok ? Verdict::Pass : Verdict::Fail,
          fmt::format("total {}, count(T^6+T^3+1) {}, {} squarefree classes consistent={}, {:.1f}s, {:.0f} MB",
                      c.total(), target, squarefree_checked, s.consistent() ? "yes" : "no", secs, mem_mb)};
}

Result matching_check() {
  const auto fixtures = load_fixtures(WEILDEN_FIXTURES);
  int fields = 0, additional = 0;
  std::uint64_t compared = 0, mismatched = 0;
  std::string problems;
  for (const auto& fx : fixtures) {
    const WeilPolynomial f = parse_weil(fx.coeffs, fx.q);
    if (!validate_conditions(f).usable()) {
      problems += " " + fx.label + ":invalid";
      continue;
    }
    ++fields;
    if (fx.coeffs != kSextic) ++additional;
    for (std::uint64_t ell : primes_below(10000)) {
      if (f.p() == ell) continue;
      const LocalFactor lf = nu_ell(f, ell);
      ++compared;
      if (!lf.matched) {
        ++mismatched;
        problems += fmt::format(" {}@{}", fx.label, ell);
      }
    }
  }
  const BigRational np = nu_p(parse_weil(kSextic, BigInt(7)));
  const bool ok = additional >= 3 && fields == additional + 1 && mismatched == 0 && np == BigRational(343, 216);
  return {ok ? Verdict::Pass : Verdict::Fail,
          fmt::format("{} fixtures ({} additional), {} exact comparisons, {} mismatches, nu_7 = {}{}", fields,
                      additional, compared, mismatched, to_string(np), problems)};
}

Result core_check() {
  const WeilPolynomial f = parse_weil(kSextic, BigInt(7));
  const RealWeilPolynomial fp = real_weil(f);
  const BigInt dplus = discriminant(fp.poly());
  const BigInt df = discriminant(f.poly());
  const bool integral = mpz_divisible_p(df.get_mpz_t(), oracle::power(7, 6).get_mpz_t()) != 0;
  const bool reexpands =
      oracle::dickson_expand(oracle::descending_to_ascending(fp.coeffs), 7) == oracle::descending_to_ascending(kSextic);
  const DiscCrossCheck x = disc_trig_crosscheck(f, 128);
  const bool ok = fp.coeffs == std::vector<BigInt>{1, 10, 27, 11} && reexpands && dplus == 361 &&
                  dplus == oracle::cubic_disc(10, 27, 11) && conductor(f) == 343 && integral &&
                  x.rel_err_f < 1e-12 && x.rel_err_fplus < 1e-12;
  return {ok ? Verdict::Pass : Verdict::Fail,
          fmt::format("f+ = {}, disc(f+) = {}, cond = {}, disc(f)/7^6 = {}, trig rel err {:.2e} / {:.2e}",
                      ZPoly::from_descending(fp.coeffs).to_string(), dplus.get_str(), conductor(f).get_str(),
                      integral ? BigInt(df / oracle::power(7, 6)).get_str() : std::string("non-integral"),
                      x.rel_err_f, x.rel_err_fplus)};
}

Result class_number_check() {
  const auto t0 = Clock::now();
  const auto fixtures = load_fixtures(WEILDEN_FIXTURES);
  const ReferenceFixture& fx = find_fixture(fixtures, "sextic19-q7");
  const WeilPolynomial f = parse_weil(fx.coeffs, fx.q);
  ProductOptions o;
  o.threads = worker_count();
  const ProductCheckpoint c = partial_product(f, 100000, fx.label, std::nullopt, o);
  const Real nu_inf = nu_infinity(f, 128).value;
  const double b3 = oscillation_band(c, nu_inf, 1000);
  const double b4 = oscillation_band(c, nu_inf, 10000);
  const double b5 = oscillation_band(c, nu_inf, 100000);
  const ComparisonReport r = compare(f, c, fx, 128);
  const double secs = seconds_since(t0);
  const bool shrinking = b3 > b4 && b4 > b5;
  const bool close = r.rel_error < 0.10;
  const Verdict v = !shrinking || secs >= 300 ? Verdict::Fail : close ? Verdict::Pass : Verdict::Review;
  return {v, fmt::format("predicted {} vs {} (rel err {:.3e}), band {:.2e} > {:.2e} > {:.2e}, {:.1f}s",
                         r.predicted.to_decimal(8), to_string(r.reference), r.rel_error, b3, b4, b5, secs)};
}

Result property_check() {
  const std::pair<const char*, props::Outcome> runs[] = {
      {"symmetry", props::functional_equation(200, 1)},
      {"re-expansion", props::reexpansion(200, 2)},
      {"factorization", props::factor_reconstruction(200, 3)},
      {"darboux", props::darboux_basis(150, 4)},
      {"commutant", props::commutant_dimension(120, 5)},
  };
  bool ok = true;
  std::string detail;
  for (const auto& [name, o] : runs) {
    ok = ok && o.passed(100);
    detail += fmt::format("{}{} {}/{}", detail.empty() ? "" : ", ", name, o.instances - o.failures, o.instances);
    if (o.failures) detail += " (first failure " + o.first_failure + ")";
  }
  return {ok ? Verdict::Pass : Verdict::Fail, detail};
}

std::string error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return std::string(to_string(e.code()));
  }
  return "none";
}

Result negative_check() {
  const WeilPolynomial g5 = parse_weil(kGenusFive, BigInt(3));
  const std::string not_relevant = error_code_of([&] { nu_ell(g5, 5); });
  const std::string unsupported = error_code_of([&] { nu_ell(g5, 2); });
  std::vector<BigInt> perturbed = kSextic;
  perturbed[3] += 1;
  const std::string rejected = error_code_of([&] { validate_conditions(parse_weil(perturbed, BigInt(7))); });
  const bool ok = not_relevant == "NotRelevant" && unsupported == "UnsupportedNonSemisimple" &&
                  (rejected == "SymmetryViolation" || rejected == "RootsOffCircle");
  return {ok ? Verdict::Pass : Verdict::Fail,
          fmt::format("non-relevant shape -> {}, g=5 ramified -> {}, perturbed input -> {}", not_relevant,
                      unsupported, rejected)};
}

const char* label(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Review: return "REVIEW";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<const char*, std::function<Result()>>> criteria = {
      {1, {"centralizer matrix", centralizer_matrix_check}},
      {2, {"GSp_6(F_2) census", census_check}},
      {3, {"exact matching", matching_check}},
      {4, {"Weil polynomial core", core_check}},
      {5, {"class-number comparison", class_number_check}},
      {6, {"property suites", property_check}},
      {7, {"negative paths", negative_check}},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (const auto& [n, _] : criteria) selected.push_back(n);

  int failures = 0;
  for (int n : selected) {
    const auto it = criteria.find(n);
    if (it == criteria.end()) {
      std::cerr << "unknown criterion " << n << '\n';
      return 2;
    }
    Result r;
    try {
      r = it->second.second();
    } catch (const std::exception& e) {
      r = {Verdict::Fail, std::string("exception: ") + e.what()};
    }
    failures += r.verdict == Verdict::Fail;
    std::cout << fmt::format("criterion {} [{}] {}: {}", n, it->second.first, label(r.verdict), r.detail)
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
