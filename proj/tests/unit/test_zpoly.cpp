#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weilden/zpoly.hpp"

using namespace weilden;

TEST_CASE("quadratic and cubic discriminants match closed forms") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int i = 0; i < 200; ++i) {
    const BigInt a = d(rng), b = d(rng), c = d(rng);
    if (a != 0) CHECK(discriminant(ZPoly({c, b, a})) == oracle::quadratic_disc(a, b, c));
    CHECK(discriminant(ZPoly({c, b, a, BigInt(1)})) == oracle::cubic_disc(a, b, c));
  }
}

TEST_CASE("resultant of split polynomials is the product of root differences") {
  // Res(prod (x - a_i), prod (x - b_j)) = prod (a_i - b_j)
  const std::vector<long> as{1, -2, 5}, bs{3, 0, -4, 7};
  ZPoly A = ZPoly::constant(1), B = ZPoly::constant(1);
  for (long a : as) A = A * ZPoly({BigInt(-a), BigInt(1)});
  for (long b : bs) B = B * ZPoly({BigInt(-b), BigInt(1)});
  BigInt expect = 1;
  for (long a : as)
    for (long b : bs) expect *= a - b;
  CHECK(resultant(A, B) == expect);
}

TEST_CASE("gcd and exact division") {
  const ZPoly a = ZPoly({BigInt(-1), BigInt(0), BigInt(1)});  // x^2 - 1
  const ZPoly b = ZPoly({BigInt(1), BigInt(1)});              // x + 1
  CHECK(gcd(a * ZPoly({BigInt(2), BigInt(1)}), b * b) == b);
  CHECK(divide_exact(a, b) == ZPoly({BigInt(-1), BigInt(1)}));
  CHECK(squarefree_part(b * b * a) == a);
}

TEST_CASE("Sturm sequences count real roots") {
  // (x - 1)(x + 2)(x - 3)(x^2 + 1)
  ZPoly p = ZPoly({BigInt(-1), BigInt(1)}) * ZPoly({BigInt(2), BigInt(1)}) * ZPoly({BigInt(-3), BigInt(1)}) *
            ZPoly({BigInt(1), BigInt(0), BigInt(1)});
  SturmSequence s(p);
  CHECK(s.count_real() == 3);
  CHECK(s.count_in(BigRational(0), BigRational(5)) == 2);
  CHECK(s.count_in(BigRational(-5, 2), BigRational(-3, 2)) == 1);
}

TEST_CASE("evaluation at quadratic irrationals has the right sign") {
  // x^2 - 2 at 1 + sqrt(2) is 1 + 2 sqrt(2) > 0; at sqrt(2) it is 0.
  ZPoly p({BigInt(-2), BigInt(0), BigInt(1)});
  CHECK(sign(eval(p, QuadraticPoint{BigRational(1), BigRational(1), BigInt(2)})) == 1);
  CHECK(sign(eval(p, QuadraticPoint{BigRational(0), BigRational(1), BigInt(2)})) == 0);
}
