#include "dkit/sbasis.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dkit;
using namespace dkit::testing;

namespace {

std::vector<std::string> leads(const StdBasis& b) {
  std::vector<std::string> out;
  for (const auto& m : b.lead_monomials()) out.push_back(render_monomial(*b.ring(), m, b.rank() > 1));
  std::sort(out.begin(), out.end());
  return out;
}

bool buchberger_holds(const StdBasis& b) {
  const auto& g = b.gens();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!mora_nf(s_vector(g[i], g[j]), g).nf.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("contact tangent image of the cusp in characteristic 0") {
  const auto r = make_ring(0, {"x", "y"});
  const std::vector<Poly> gens{P(r, "x^2 + y^3"), P(r, "x*2*x"), P(r, "x*3*y^2"), P(r, "y*2*x"), P(r, "y*3*y^2")};
  const StdBasis b = standard_basis(r, 1, gens);
  CHECK(leads(b) == std::vector<std::string>{"x*y", "x^2", "y^3"});
  CHECK(vdim(b) == 4);
  CHECK(buchberger_holds(b));
}

TEST_CASE("Mora normal form uses units") {
  const auto r = make_ring(0, {"x", "y"});
  const std::vector<Poly> basis{P(r, "x + x^2")};
  const auto nf = mora_nf(P(r, "x"), basis);
  CHECK(nf.nf.is_zero());
  CHECK(nf.unit_ok);
  CHECK(mora_nf(P(r, "y"), basis).nf == P(r, "y"));
  const std::vector<Poly> two{P(r, "x - y^2"), P(r, "y - x^2")};
  CHECK(mora_nf(P(r, "x*y"), standard_basis(r, 1, two).gens()).nf.is_zero());
}

TEST_CASE("global normal form does not invert units") {
  const auto r = make_ring(0, {"x", "y"}, Ordering::global_degree());
  const std::vector<Poly> basis{P(r, "x + x^2")};
  CHECK_FALSE(mora_nf(P(r, "x"), basis).nf.is_zero());
}

TEST_CASE("global Groebner basis is reduced and monic") {
  const auto r = make_ring(0, {"x", "y"}, Ordering::global_degree());
  const std::vector<Poly> gens{P(r, "x^2 + y^2 - 1"), P(r, "x - y")};
  const StdBasis b = standard_basis(r, 1, gens);
  auto got = rendered(b.gens());
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"x - y", "y^2 - 1/2"});
  CHECK(vdim(b) == 2);
  CHECK(krull_dim(b) == 0);
}

TEST_CASE("staircase queries") {
  const auto r = make_ring(2, {"x", "y"});
  const std::vector<Poly> gens{P(r, "x^2 + y^3"), P(r, "x*y^2"), P(r, "y^3")};
  const StdBasis b = standard_basis(r, 1, gens);
  CHECK(leads(b) == std::vector<std::string>{"x*y^2", "x^2", "y^3"});
  CHECK(vdim(b) == 5);
  std::vector<std::string> kb;
  for (const auto& m : kbase(b)) kb.push_back(render_monomial(*r, m, false));
  CHECK(kb == std::vector<std::string>{"1", "x", "y", "x*y", "y^2"});
  CHECK(krull_dim(b) == 0);

  const std::vector<Poly> inf{P(r, "x*y^2"), P(r, "y^3")};
  const StdBasis bi = standard_basis(r, 1, inf);
  CHECK_FALSE(vdim(bi));
  CHECK_THROWS_AS(kbase(bi), InfiniteDimension);
  CHECK(kbase(bi, 2).size() == 6);
  CHECK(krull_dim(bi) == 1);

  const std::vector<Poly> unit{P(r, "1 + x")};
  const StdBasis bu = standard_basis(r, 1, unit);
  CHECK(vdim(bu) == 0);
  CHECK(krull_dim(bu) == -1);
  CHECK(krull_dim(standard_basis(r, 1, std::vector<Poly>{})) == 2);
}

TEST_CASE("submodules of a free module") {
  const auto r = make_ring(0, {"x", "y"});
  const std::vector<Poly> c0{P(r, "x"), P(r, "0")}, c1{P(r, "y"), P(r, "x")}, c2{P(r, "0"), P(r, "y")};
  const std::vector<Vect> gens{Vect::from_components(r, c0), Vect::from_components(r, c1),
                               Vect::from_components(r, c2)};
  const StdBasis b = standard_basis(r, 2, gens);
  CHECK(buchberger_holds(b));
  // (x,0), (y,x), (0,y): quotient spanned by e1, e2, y*e1
  CHECK(vdim(b) == 3);
  CHECK_THROWS_AS(standard_basis(r, 3, gens), RankMismatch);
}

TEST_CASE("random ideals: Buchberger criterion, idempotence, vdim and Krull dimension") {
  std::mt19937_64 rng(23);
  for (std::uint64_t p : {0ull, 2ull, 3ull}) {
    for (const auto& ord : {Ordering::local_degree(), Ordering::global_degree()}) {
      const auto r = make_ring(p, {"x", "y", "z"}, ord);
      for (int i = 0; i < 12; ++i) {
        const MatrixSeries a = random_matrix(rng, r, 1, 3, 3);
        const StdBasis b = standard_basis(r, 1, a.entries());
        CHECK(buchberger_holds(b));
        for (const auto& f : a.entries()) CHECK(mora_nf(f, b.gens()).nf.is_zero());
        const StdBasis again = standard_basis(r, 1, b.gens());
        CHECK(leads(again) == leads(b));
        CHECK(krull_dim(b) == krull_oracle(b.lead_monomials(), 3));
        if (const auto v = vdim(b)) CHECK(static_cast<std::size_t>(*v) == kbase(b).size());
      }
    }
  }
}

TEST_CASE("elimination of a parametrized cusp") {
  const auto r = make_ring(0, {"t", "u1", "u2"}, Ordering::global_degree());
  const std::vector<Poly> gens{P(r, "u1 - t^2"), P(r, "u2 - t^3")};
  const std::vector<std::size_t> elim{0};
  const auto eqs = eliminate(gens, elim);
  REQUIRE_FALSE(eqs.empty());
  const auto u = make_ring(0, {"u1", "u2"}, Ordering::global_degree());
  const std::vector<std::size_t> to_u{0, 0, 1};
  std::vector<Poly> mapped;
  for (const auto& f : eqs) mapped.push_back(map_variables(f, u, to_u));
  CHECK(rendered(standard_basis(u, 1, mapped).gens()) == std::vector<std::string>{"u1^3 - u2^2"});
}

TEST_CASE("eliminated polynomials vanish on the parametrization") {
  const auto r = make_ring(5, {"s", "t", "a", "b", "c"}, Ordering::global_degree());
  const std::vector<Poly> gens{P(r, "a - s*t"), P(r, "b - s^2"), P(r, "c - t^2")};
  const std::vector<std::size_t> elim{0, 1};
  const auto eqs = eliminate(gens, elim);
  REQUIRE_FALSE(eqs.empty());
  std::mt19937_64 rng(2);
  const Field& k = r->field();
  for (int i = 0; i < 20; ++i) {
    const Coef s = random_coef(rng, k, false), t = random_coef(rng, k, false);
    const std::vector<Coef> pt{s, t, s * t, s * s, t * t};
    for (const auto& f : eqs) {
      CHECK(evaluate(f, pt).is_zero());
      for (const auto& term : f.terms()) CHECK(term.mono.exps[0] + term.mono.exps[1] == 0);
    }
  }
}
