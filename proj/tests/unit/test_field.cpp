#include "dkit/field.hpp"

#include <doctest.h>

#include <random>

using namespace dkit;

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(7);
  CHECK(f.from_int(3) + f.from_int(5) == f.from_int(1));
  CHECK(f.from_int(3) * f.from_int(5) == f.from_int(1));
  CHECK(f.from_int(-1) == f.from_int(6));
  CHECK(f.from_int(3).inverse() == f.from_int(5));
  CHECK(f.from_int(2) / f.from_int(4) == f.from_int(4));
  CHECK(f.from_int(14).is_zero());
  CHECK(f.to_string() == "GF(7)");
  CHECK(f.from_int(-2).to_string() == "5");
}

TEST_CASE("rationals") {
  const Field q = Field::rationals();
  const Coef half = q.from_fraction(1, 2);
  CHECK(half + half == q.one());
  CHECK(q.from_fraction(2, -4) == -half);
  CHECK(q.from_fraction(6, 4).to_string() == "3/2");
  CHECK(q.from_int(-3).to_string() == "-3");
  CHECK(q.to_string() == "QQ");
  CHECK(half.inverse() == q.from_int(2));
}

TEST_CASE("field construction validates the characteristic") {
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK_THROWS(Field::from_characteristic(9));
  CHECK(Field::from_characteristic(0).is_rationals());
  CHECK(Field::from_characteristic(2147483647).characteristic() == 2147483647u);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("division by zero and field mismatch") {
  const Field f = Field::prime(5);
  CHECK_THROWS_AS(f.zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(f.one() / f.zero(), DivisionByZero);
  CHECK_THROWS_AS(Field::rationals().zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(f.one() + Field::prime(7).one(), FieldMismatch);
  CHECK_THROWS_AS(f.one() * Field::rationals().one(), FieldMismatch);
  CHECK_FALSE(Field::prime(7).contains(f.one()));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull, 101ull}) {
    const Field f = Field::from_characteristic(p);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
      const Coef a = f.from_int(d(rng)), b = f.from_int(d(rng)), c = f.from_fraction(d(rng), 11);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == f.zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
    }
  }
}

TEST_CASE("Frobenius is additive in characteristic p") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    const Field f = Field::prime(p);
    for (int a = 0; a < static_cast<int>(p); ++a) {
      CHECK(f.from_int(a).pow(p) == f.from_int(a));
      for (int b = 0; b < static_cast<int>(p); ++b)
        CHECK((f.from_int(a) + f.from_int(b)).pow(p) == f.from_int(a).pow(p) + f.from_int(b).pow(p));
    }
  }
}
