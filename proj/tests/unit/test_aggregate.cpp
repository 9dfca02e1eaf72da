#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "oracles.hpp"
#include "weilden/aggregate.hpp"
#include "weilden/error.hpp"
#include "weilden/localdensity.hpp"
#include "weilden/primes.hpp"

using namespace weilden;

namespace {

const WeilPolynomial& sextic() {
  static const WeilPolynomial f = parse_weil(std::vector<BigInt>{1, 10, 48, 151, 336, 490, 343}, BigInt(7));
  return f;
}

// Product assembled one factor at a time from the local-density module.
BigRational composed_product(const WeilPolynomial& f, std::uint64_t B) {
  BigRational r(1);
  for (std::uint64_t ell : oracle::trial_primes_below(B)) r *= (ell == 7 ? nu_p(f) : nu_ell(f, ell).nu_f);
  return r;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("small bounds in exact mode") {
  CHECK(*partial_product(sextic(), 2, "sextic").exact_product == 1);
  CHECK(*partial_product(sextic(), 3, "sextic").exact_product == BigRational(8, 9));
  const ProductCheckpoint c8 = partial_product(sextic(), 8, "sextic");
  CHECK(*c8.exact_product == composed_product(sextic(), 8));
  BigRational without_p = composed_product(sextic(), 6);
  CHECK(*c8.exact_product == without_p * BigRational(343, 216));
}

TEST_CASE("exact and log products agree below the cutoff") {
  const ProductCheckpoint c = partial_product(sextic(), 10000, "sextic");
  REQUIRE(c.exact_product);
  const double exact = c.exact_product->get_d();
  CHECK(std::abs(c.product().to_double() - exact) / exact < 1e-12);
  CHECK(*c.exact_product == composed_product(sextic(), 10000));
}

TEST_CASE("exact product is dropped above the cutoff") {
  ProductOptions o;
  o.exact_cutoff = 100;
  CHECK_FALSE(partial_product(sextic(), 1000, "sextic", std::nullopt, o).exact_product);
}

TEST_CASE("snapshots at decades and their multiples") {
  CHECK(is_snapshot_bound(7));
  CHECK(is_snapshot_bound(30));
  CHECK(is_snapshot_bound(9000));
  CHECK_FALSE(is_snapshot_bound(11));
  CHECK_FALSE(is_snapshot_bound(0));
  const ProductCheckpoint c = partial_product(sextic(), 1000, "sextic");
  for (std::size_t i = 1; i < c.history.size(); ++i) CHECK(c.history[i - 1].bound < c.history[i].bound);
  CHECK(c.history.back().bound == 1000);
  CHECK(c.history.back().value == c.product());
}

TEST_CASE("resuming reproduces a cold run bit for bit") {
  for (std::uint64_t cut : {std::uint64_t{100000}, std::uint64_t{50}}) {
    ProductOptions o;
    o.exact_cutoff = cut;
    const ProductCheckpoint cold = partial_product(sextic(), 20000, "sextic", std::nullopt, o);
    const ProductCheckpoint half = partial_product(sextic(), 7001, "sextic", std::nullopt, o);
    const ProductCheckpoint warm = partial_product(sextic(), 20000, "sextic", half, o);
    CHECK(warm == cold);
  }
}

TEST_CASE("thread count does not change the result") {
  ProductOptions one, four;
  four.threads = 4;
  CHECK(partial_product(sextic(), 30000, "sextic", std::nullopt, one) ==
        partial_product(sextic(), 30000, "sextic", std::nullopt, four));
}

TEST_CASE("character-side factors give the identical checkpoint") {
  ProductOptions chi;
  chi.source = FactorSource::Character;
  const ProductCheckpoint a = partial_product(sextic(), 5000, "sextic");
  ProductCheckpoint b = partial_product(sextic(), 5000, "sextic", std::nullopt, chi);
  b.source = FactorSource::Centralizer;
  CHECK(a == b);
}

TEST_CASE("checkpoint files round-trip") {
  const ProductCheckpoint c = partial_product(sextic(), 3000, "sextic");
  CHECK(checkpoint_from_json(checkpoint_to_json(c)) == c);
  const auto path = (std::filesystem::temp_directory_path() / "weilden_test.ckpt").string();
  save_checkpoint(c, path);
  CHECK(load_checkpoint(path) == c);
  std::remove(path.c_str());
  CHECK(code_of([] { checkpoint_from_json("{\"version\": 99}"); }) != ErrorCode::FixtureMismatch);
}

TEST_CASE("resume guards") {
  const ProductCheckpoint c = partial_product(sextic(), 100, "sextic");
  CHECK(code_of([&] { partial_product(sextic(), 200, "other", c); }) == ErrorCode::FixtureMismatch);
  ProductOptions o;
  o.precision = 256;
  CHECK(code_of([&] { partial_product(sextic(), 200, "sextic", c, o); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("failure prime is recorded for g = 5") {
  const auto f = parse_weil(std::vector<BigInt>{1, -2, 9, -20, 40, -86, 120, -180, 243, -162, 243}, BigInt(3));
  const ProductCheckpoint c = partial_product(f, 100, "g5");
  REQUIRE(c.failed_prime);
  CHECK(*c.failed_prime == 2);
  CHECK(c.failure.find("UnsupportedNonSemisimple") != std::string::npos);
}

TEST_CASE("fixtures load and the reference ratio is exact") {
  const auto fx = load_fixtures(WEILDEN_FIXTURES);
  REQUIRE(fx.size() >= 4);
  const ReferenceFixture& p = find_fixture(fx, "sextic19-q7");
  CHECK(p.reference() == BigRational(1, 2));
  CHECK(parse_fixture(fixture_to_json(p)) == p);
  CHECK(code_of([&] { find_fixture(fx, "missing"); }) == ErrorCode::FixtureMismatch);
}

TEST_CASE("comparison arithmetic on synthetic fixtures") {
  const ProductCheckpoint c = partial_product(sextic(), 1000, "sextic19-q7");
  ReferenceFixture fx;
  fx.label = "sextic19-q7";
  fx.coeffs = sextic().coeffs();
  fx.q = 7;
  fx.h_K = 1;
  fx.h_Kplus = 1;
  fx.omega_K = 2;
  const ComparisonReport base = compare(sextic(), c, fx);
  // synthetic fixture equal to the prediction
  ReferenceFixture exact = fx;
  const BigRational pred = base.predicted.to_rational();
  exact.h_K = pred.get_num();
  exact.h_Kplus = pred.get_den();
  exact.omega_K = 1;
  CHECK(compare(sextic(), c, exact).rel_error < 1e-30);
  // doubling omega halves the reference: rel_error = |2 r - r| / r computed against the halved one
  ReferenceFixture halved = exact;
  halved.omega_K = 2;
  CHECK(compare(sextic(), c, halved).rel_error == doctest::Approx(1.0).epsilon(1e-12));
  ReferenceFixture wrong = fx;
  wrong.label = "other";
  CHECK(code_of([&] { compare(sextic(), c, wrong); }) == ErrorCode::FixtureMismatch);
}

TEST_CASE("oscillation band is max minus min over the last snapshots") {
  const ProductCheckpoint c = partial_product(sextic(), 1000, "sextic");
  const Real one(1.0, 128);
  double hi = -1, lo = 1e9;
  for (std::size_t i = c.history.size() - 5; i < c.history.size(); ++i) {
    hi = std::max(hi, c.history[i].value.to_double());
    lo = std::min(lo, c.history[i].value.to_double());
  }
  CHECK(oscillation_band(c, one, 1000) == doctest::Approx(hi - lo).epsilon(1e-12));
}
