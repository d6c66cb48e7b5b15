#include "dkit/parse.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace dkit;
using namespace dkit::testing;

TEST_CASE("grammar") {
  const auto r = make_ring(0, {"x", "y"});
  CHECK(render(P(r, "(x + y)^2")) == "x^2 + 2*x*y + y^2");
  CHECK(render(P(r, "-x*y + 3")) == "3 - x*y");
  CHECK(render(P(r, "2*x^2*y - -y")) == "y + 2*x^2*y");
  CHECK(render(P(r, "x/2")) == "1/2*x");
  CHECK(render(P(r, "  x^0 ")) == "1");
  CHECK(P(r, "x^2+y^3") == P(r, "y^3 + x*x"));
}

TEST_CASE("characteristic p coefficients reduce") {
  const auto r = make_ring(2, {"x", "y"});
  CHECK(render(P(r, "3*x + 2*y")) == "x");
  CHECK(P(r, "(x + y)^2") == P(r, "x^2 + y^2"));
}

TEST_CASE("names with parentheses and digits") {
  const auto r = make_ring(0, {"u(1)", "u(12)", "x_2"});
  CHECK(render(P(r, "u(12)*u(1) + x_2^2")) == "u(1)*u(12) + x_2^2");
}

TEST_CASE("parse errors carry offsets") {
  const auto r = make_ring(0, {"x", "y"});
  try {
    P(r, "x + ");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
  try {
    P(r, "x*z");
    FAIL("expected an unknown variable");
  } catch (const UnknownVariable& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(P(r, "x2"), UnknownVariable);
  CHECK_THROWS_AS(P(r, "x^"), SyntaxError);
  CHECK_THROWS_AS(P(r, "(x"), SyntaxError);
  CHECK_THROWS_AS(P(r, "x)"), SyntaxError);
  CHECK_THROWS_AS(P(r, "x^70000"), ParseError);
  CHECK_THROWS(P(r, "x/0"));
  CHECK_THROWS(P(r, "x/y"));
}

TEST_CASE("render then parse is the identity") {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {0ull, 2ull, 5ull}) {
    const auto r = make_ring(p, {"x", "y"});
    for (int i = 0; i < 50; ++i) {
      const MatrixSeries a = random_matrix(rng, r, 1, 1, 4);
      Poly f = a.at(0, 0);
      if (p == 0) f = f.scaled(r->field().from_fraction(1, 3));
      CHECK(P(r, render(f)) == f);
    }
  }
}
