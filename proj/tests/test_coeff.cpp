#include <doctest.h>

#include <random>

#include "xyk/coeff.hpp"

using namespace xyk;

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational());
  CHECK((Rational(3) * Rational(1, 3)).is_one());
  CHECK(Rational(7, 3).str() == "7/3");
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational::parse("5") == Rational(5));
}

TEST_CASE("rational division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(), DivisionByZero);
  CHECK_THROWS_AS(Rational().inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  auto rnd = [&] { return Rational(num(rng), den(rng)); };
  for (int it = 0; it < 200; ++it) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("prime field basics") {
  GFp a(3, 7), b(5, 7);
  CHECK((a * b).is_one());  // 15 mod 7 = 1
  CHECK(a.str() == "3 mod 7");
  CHECK((a + b) == GFp(1, 7));
  CHECK((-a) == GFp(4, 7));
  CHECK((a - b) == GFp(5, 7));
  CHECK((a / b) == a * b.inverse());
  CHECK_THROWS_AS(a / GFp(0, 7), DivisionByZero);
}

TEST_CASE("prime field modulus rules") {
  GFp a(3, 7), c(3, 11);
  CHECK_THROWS_AS(a + c, ModulusMismatch);
  CHECK_THROWS_AS(a * c, ModulusMismatch);
  GFp detached;  // default zero combines with anything
  CHECK((a + detached) == a);
  CHECK((detached * a).is_zero());
  CHECK(detached == GFp(0, 7));
  CHECK(detached == GFp(0, 11));
}

TEST_CASE("prime field axioms on random values") {
  PrimeField F(2147483647);  // 2^31 - 1
  std::mt19937_64 rng(999);
  std::uniform_int_distribution<std::uint64_t> d(0, F.p - 1);
  for (int it = 0; it < 200; ++it) {
    GFp a(d(rng), F.p), b(d(rng), F.p), c(d(rng), F.p);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("prime field context validation") {
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(2147483647));
  PrimeField F(7);
  CHECK(F.from_literal("10", "") == GFp(3, 7));
  CHECK(F.from_literal("1", "2") == GFp(4, 7));  // inverse of 2 mod 7
  CHECK(F.from_literal("-1", "").residue() == 6);
}

TEST_CASE("rational literal parsing") {
  RationalField F;
  CHECK(F.from_literal("7", "3") == Rational(7, 3));
  CHECK(F.from_literal("5", "") == Rational(5));
  CHECK(F.from_literal("-5", "") == Rational(-5));
}
