#include <doctest.h>

#include "weilden/error.hpp"
#include "weilden/numeric.hpp"

using namespace weilden;

TEST_CASE("rationals parse and print as num/den") {
  CHECK(parse_rational("6/4") == BigRational(3, 2));
  CHECK(parse_rational("-7") == BigRational(-7));
  CHECK(to_string(BigRational(343, 216)) == "343/216");
  CHECK(to_string(BigRational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("integers parse strictly") {
  CHECK(parse_integer("-12345678901234567890") == BigInt("-12345678901234567890"));
  CHECK_THROWS_AS(parse_integer("12x"), Error);
  CHECK(pow(BigInt(7), 6) == 117649);
}

TEST_CASE("hex encoding of reals round-trips exactly") {
  for (int prec : {53, 128, 256}) {
    Real third(BigRational(1, 3), prec);
    Real back = Real::parse_hex(third.to_hex(), prec);
    CHECK(back == third);
    CHECK(back.to_hex() == third.to_hex());
  }
  Real zero(0.0, 128);
  CHECK(Real::parse_hex(zero.to_hex(), 128).is_zero());
}

TEST_CASE("elementary functions agree with double precision") {
  Real x(0.25, 128);
  CHECK(log1p(x).to_double() == doctest::Approx(0.22314355131420976).epsilon(1e-15));
  CHECK(exp(x).to_double() == doctest::Approx(1.2840254166877414).epsilon(1e-15));
  CHECK(Real::pi(128).to_double() == doctest::Approx(3.141592653589793));
  CHECK(sqrt(Real(2.0, 128)).to_double() == doctest::Approx(1.4142135623730951));
  CHECK(Real(BigRational(1, 3), 128).to_decimal(10).rfind("0.333333333", 0) == 0);
}
