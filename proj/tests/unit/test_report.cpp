#include <doctest.h>

#include "weilden/report.hpp"

using namespace weilden;

namespace {

const WeilPolynomial& sextic() {
  static const WeilPolynomial f = parse_weil(std::vector<BigInt>{1, 10, 48, 151, 336, 490, 343}, BigInt(7));
  return f;
}

}  // namespace

TEST_CASE("local table rows") {
  const auto rows = local_table(sextic(), {2, 7, 19});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].shape == "[6]");
  CHECK(to_string(*rows[0].nu_f) == "8/9");
  CHECK(rows[0].status == "ok");
  CHECK(rows[1].shape == "p-adic");
  CHECK(to_string(*rows[1].nu_f) == "343/216");
  CHECK_FALSE(rows[1].nu_K);
  CHECK(rows[1].status == "ok(nu_p)");
  CHECK(rows[2].shape == "[1]^6");
  const std::string human = render_human(rows);
  CHECK(human.find("8/9") != std::string::npos);
}

TEST_CASE("g = 5 rows carry per-row errors") {
  const auto f = parse_weil(std::vector<BigInt>{1, -2, 9, -20, 40, -86, 120, -180, 243, -162, 243}, BigInt(3));
  const auto rows = local_table(f, {2, 5, 19});
  CHECK(rows[0].status == "error");
  CHECK(rows[0].error.rfind("UnsupportedNonSemisimple", 0) == 0);
  CHECK(rows[1].error.rfind("NotRelevant", 0) == 0);
  CHECK(rows[2].status == "ok");
}

TEST_CASE("fault injection: a wrong centralizer table is detected") {
  const CentralizerTable off_by_one = [](ShapeKind k, std::uint64_t ell, unsigned g) {
    return centralizer_order(k, ell, g) + 1;
  };
  const LocalFactor lf = nu_ell(sextic(), 2, off_by_one);
  CHECK_FALSE(lf.matched);
  CHECK(lf.nu_K == BigRational(8, 9));
}

TEST_CASE("structured output round-trips for every report type") {
  const ValidationReport v = validate_conditions(sextic());
  CHECK(validation_from_json(Json::parse(to_json(v).dump())) == v);

  for (const auto& row : local_table(sextic(), {2, 3, 5, 7, 11, 19}))
    CHECK(local_row_from_json(Json::parse(to_json(row).dump())) == row);

  const ArchimedeanReport a = archimedean_report(sextic(), 128);
  CHECK(archimedean_from_json(Json::parse(to_json(a).dump())) == a);

  const auto fixtures = load_fixtures(WEILDEN_FIXTURES);
  const ProductCheckpoint c = partial_product(sextic(), 1000, "sextic19-q7");
  const ComparisonReport cr = compare(sextic(), c, find_fixture(fixtures, "sextic19-q7"));
  CHECK(comparison_from_json(Json::parse(to_json(cr).dump())) == cr);

  CHECK(checkpoint_from_json(to_json(c).dump()) == c);

  for (const auto& cell : centralizer_matrix(3, {3}))
    CHECK(centralizer_cell_from_json(Json::parse(to_json(cell).dump())) == cell);
}

TEST_CASE("census summary round-trips") {
  const CensusSummary s = summarize_census(enumerate_group(3, 2, 1, 4));
  CHECK(census_from_json(Json::parse(to_json(s).dump())) == s);
  CHECK(s.total == 1451520);
}

TEST_CASE("rationals are serialized as strings") {
  const Json j = to_json(local_table(sextic(), {2}).front());
  CHECK(j["nu_f"].is_string());
  CHECK(j["nu_f"].get<std::string>() == "8/9");
}

TEST_CASE("reports are deterministic") {
  CHECK(to_json(archimedean_report(sextic(), 128)).dump() == to_json(archimedean_report(sextic(), 128)).dump());
  CHECK(to_json(validate_conditions(sextic())).dump() == to_json(validate_conditions(sextic())).dump());
}
