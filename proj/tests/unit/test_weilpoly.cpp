#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weilden/error.hpp"
#include "weilden/weilpoly.hpp"

using namespace weilden;

namespace {

const std::vector<BigInt> kSextic{1, 10, 48, 151, 336, 490, 343};

ErrorCode code_of(const std::vector<BigInt>& c, long q) {
  try {
    parse_weil(c, BigInt(q));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("q = 7 example: real Weil polynomial and discriminants") {
  const WeilPolynomial f = parse_weil(kSextic, BigInt(7));
  CHECK(f.g() == 3);
  CHECK(f.p() == 7);
  CHECK(f.a() == 1);
  const RealWeilPolynomial fp = real_weil(f);
  CHECK(fp.coeffs == std::vector<BigInt>{1, 10, 27, 11});
  CHECK(discriminant(fp.poly()) == oracle::cubic_disc(10, 27, 11));
  CHECK(discriminant(fp.poly()) == 361);
  const auto re = oracle::dickson_expand(oracle::descending_to_ascending(fp.coeffs), 7);
  CHECK(re == oracle::descending_to_ascending(kSextic));
  CHECK(conductor(f) == 343);
  const BigInt disc = discriminant(f.poly());
  CHECK(mpz_divisible_p(disc.get_mpz_t(), BigInt(117649).get_mpz_t()));
  CHECK(order_discriminant(f) == disc / 117649);
  CHECK(order_discriminant(f) == -2476099);
}

TEST_CASE("Frobenius angles lie on the circle and reproduce f+") {
  const WeilPolynomial f = parse_weil(kSextic, BigInt(7));
  const FrobeniusAngles fa = frobenius_angles(f, 128);
  CHECK(fa.angles.size() == 3);
  CHECK(fa.angle_error.to_double() < 1e-30);
  // sum of 2 sqrt(7) cos(theta) equals minus the x^2 coefficient of f+
  double s = 0;
  for (const auto& r : fa.real_roots) s += r.to_double();
  CHECK(s == doctest::Approx(-10.0).epsilon(1e-14));
}

TEST_CASE("trigonometric discriminant cross-check") {
  const auto x = disc_trig_crosscheck(parse_weil(kSextic, BigInt(7)), 128);
  CHECK(x.rel_err_f < 1e-12);
  CHECK(x.rel_err_fplus < 1e-12);
}

TEST_CASE("archimedean factor for the q = 7 example") {
  const ArchimedeanFactor a = nu_infinity(parse_weil(kSextic, BigInt(7)), 128);
  CHECK(a.components.cond == 343);
  CHECK(a.components.disc_fplus == 361);
  // sqrt(|disc f / disc f+|) / (cond (2 pi)^3) with disc f = -19^5 7^6
  const double expect = std::sqrt(2476099.0 * 117649.0 / 361.0) / (343.0 * std::pow(2 * M_PI, 3));
  CHECK(a.value.to_double() == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("g = 1: discriminant sign and archimedean factor") {
  // T^2 - aT + q: disc = a^2 - 4q < 0, f+ = x - a
  const WeilPolynomial f = parse_weil(std::vector<BigInt>{BigInt(1), BigInt(-3), BigInt(7)}, BigInt(7));
  CHECK(real_weil(f).coeffs == std::vector<BigInt>{1, -3});
  CHECK(discriminant(f.poly()) == oracle::quadratic_disc(1, -3, 7));
  CHECK(conductor(f) == 1);
}

TEST_CASE("input errors are classified") {
  CHECK(code_of({1, 10, 48, 151, 336, 490, 343}, 6) == ErrorCode::NotPrimePower);
  CHECK(code_of({2, 10, 48, 151, 336, 490, 343}, 7) == ErrorCode::NotMonic);
  CHECK(code_of({1, 10, 48, 151, 336, 490}, 7) == ErrorCode::OddDegree);
  CHECK(code_of({1, 10, 48, 151, 336, 491, 343}, 7) == ErrorCode::SymmetryViolation);
  // symmetric but with roots off the circle: f+ = x^3 - 100
  CHECK(code_of({1, 0, 21, -100, 147, 0, 343}, 7) == ErrorCode::RootsOffCircle);
  CHECK(code_of({1, 0, 0, 0, 0, 0, 0}, 7) == ErrorCode::SymmetryViolation);
}

TEST_CASE("coefficient lists parse with whitespace and signs") {
  CHECK(parse_coefficient_list(" 1, -10 ,48") == std::vector<BigInt>{1, -10, 48});
  CHECK_THROWS_AS(parse_coefficient_list("1,,2"), Error);
  CHECK(format_coefficient_list({1, -2, 3}) == "1,-2,3");
}

TEST_CASE("re-expansion is the inverse of real_weil on random inputs") {
  std::mt19937_64 rng(3);
  for (long q : {2L, 3L, 4L, 5L, 7L, 9L, 25L}) {
    for (unsigned g : {1u, 2u, 3u, 4u}) {
      const auto fplus = oracle::random_real_weil(g, BigInt(q), rng);
      const auto f = oracle::dickson_expand(fplus, BigInt(q));
      const ZPoly got = expand_from_real(ZPoly(fplus), BigInt(q));
      CHECK(got.ascending() == f);
    }
  }
}

TEST_CASE("trigonometric discriminant conventions at g = 1 and g = 2") {
  // g = 1: T^2 - 3T + 7, disc = 9 - 28 = -19
  const auto f1 = parse_weil(std::vector<BigInt>{1, -3, 7}, BigInt(7));
  CHECK(discriminant(f1.poly()) == -19);
  const auto x1 = disc_trig_crosscheck(f1, 128);
  CHECK(x1.rel_err_f < 1e-12);
  CHECK(x1.rel_err_fplus < 1e-12);
  // g = 2: f+ = x^2 + x - 3 with q = 5, f = T^4 + T^3 + 7T^2 + 5T + 25
  const auto f2 = parse_weil(std::vector<BigInt>{1, 1, 7, 5, 25}, BigInt(5));
  CHECK(real_weil(f2).coeffs == std::vector<BigInt>{1, 1, -3});
  CHECK(discriminant(real_weil(f2).poly()) == oracle::quadratic_disc(1, 1, -3));
  const auto x2 = disc_trig_crosscheck(f2, 128);
  CHECK(x2.rel_err_f < 1e-12);
  CHECK(x2.rel_err_fplus < 1e-12);
  // g conjugate pairs of non-real roots: sign (-1)^g
  CHECK(discriminant(f2.poly()) > 0);
  CHECK(discriminant(f1.poly()) < 0);
}
