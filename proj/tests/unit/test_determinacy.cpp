#include "dkit/determinacy.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dkit;
using namespace dkit::testing;

namespace {

std::vector<std::string> leads(const TangentImage& t) {
  std::vector<std::string> out;
  for (const auto& m : t.basis.lead_monomials()) out.push_back(render_monomial(*t.basis.ring(), m, t.basis.rank() > 1));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("cusp in characteristic 2 under contact") {
  const auto r = make_ring(2, {"x", "y"});
  const MatrixSeries a = M(r, {{"x^2 + y^3"}});
  CHECK(rendered(tangent_image_generators(a, GroupKind::Gl)) == std::vector<std::string>{"x^2 + y^3", "x*y^2", "y^3"});
  const TangentImage t = tangent_image(a, GroupKind::Gl);
  CHECK(leads(t) == std::vector<std::string>{"x*y^2", "x^2", "y^3"});
  const auto q = basis_codim(t);
  REQUIRE(q);
  CHECK(q->codim == 5);
  std::vector<std::string> kb;
  for (const auto& m : q->kbasis) kb.push_back(render_monomial(*t.basis.ring(), m, false));
  CHECK(kb == std::vector<std::string>{"1", "x", "y", "x*y", "y^2"});
  CHECK(predeterminacy(t) == 2);
  const DetermResult d = determinacy_bound(t);
  CHECK(d.order == 2);
  CHECK(d.determ_bound == 4);
  CHECK(determinacy_verdict(d, 1, GroupKind::Gl) == Verdict::FinitelyDetermined);
}

TEST_CASE("cusp in characteristic 0 under contact") {
  const auto r = make_ring(0, {"x", "y"});
  const TangentImage t = tangent_image(M(r, {{"x^2 + y^3"}}), GroupKind::Gl);
  CHECK(leads(t) == std::vector<std::string>{"x*y", "x^2", "y^3"});
  const DetermResult d = determinacy_bound(t);
  CHECK(d.codim == 4);
  CHECK(d.pre_bound == 2);
  CHECK(d.determ_bound == 4);
}

TEST_CASE("cusp in characteristic 2 under right equivalence has infinite codimension") {
  const auto r = make_ring(2, {"x", "y"});
  const MatrixSeries a = M(r, {{"x^2 + y^3"}});
  CHECK(rendered(tangent_image_generators(a, GroupKind::RightR)) == std::vector<std::string>{"x*y^2", "y^3"});
  const TangentImage t = tangent_image(a, GroupKind::RightR);
  CHECK_FALSE(basis_codim(t));
  CHECK_FALSE(predeterminacy(t));
  const DetermResult d = determinacy_bound(t);
  CHECK_FALSE(d.codim);
  CHECK_FALSE(d.pre_bound);
  CHECK_FALSE(d.determ_bound);
  CHECK(d.order == 2);
  CHECK(determinacy_verdict(d, 1, GroupKind::RightR) == Verdict::Undecided);
  CHECK(determinacy_verdict(d, 1, GroupKind::Gl) == Verdict::NotFinitelyDetermined);
  CHECK(determinacy_verdict(d, 2, GroupKind::Glr) == Verdict::Undecided);
}

TEST_CASE("smooth germ") {
  const auto r = make_ring(3, {"x", "y"});
  const DetermResult d = determinacy_bound(M(r, {{"x"}}), GroupKind::Gl);
  CHECK(d.codim == 1);
  CHECK(d.pre_bound == 0);
  CHECK(d.order == 1);
  CHECK(d.determ_bound == 1);
}

TEST_CASE("constant entries are rejected") {
  const auto r = make_ring(0, {"x"});
  CHECK_THROWS_AS(tangent_image(M(r, {{"1 + x"}}), GroupKind::Gl), NotInMaximalIdeal);
}

TEST_CASE("matrix groups on a 2x2 example") {
  const auto r = make_ring(0, {"x", "y"});
  const MatrixSeries a = M(r, {{"x", "y"}, {"y", "x + x^2"}});
  const auto cr = vdim(tangent_image(a, GroupKind::RightR).basis);
  const auto cl = vdim(tangent_image(a, GroupKind::Gl).basis);
  const auto cg = vdim(tangent_image(a, GroupKind::Gr).basis);
  const auto clr = vdim(tangent_image(a, GroupKind::Glr).basis);
  REQUIRE(clr);
  const auto o = jet_oracle(a, GroupKind::Glr);
  REQUIRE(o);
  CHECK(*clr == o->codim);
  if (cl) CHECK(*cl >= *clr);
  if (cg) CHECK(*cg >= *clr);
  if (cr && cl) CHECK(*cr >= *cl);
}

TEST_CASE("codimension is monotone in the group and matches the jet oracle") {
  std::mt19937_64 rng(31);
  int finite = 0;
  for (std::uint64_t p : {0ull, 2ull, 3ull}) {
    const auto r = make_ring(p, {"x", "y"});
    for (int i = 0; i < 15; ++i) {
      const std::size_t m = 1 + rng() % 2, n = 1 + rng() % 2;
      const MatrixSeries a = random_matrix(rng, r, m, n, 3);
      std::optional<std::int64_t> prev_right, prev_left;
      for (GroupKind g : {GroupKind::RightR, GroupKind::Gl, GroupKind::Gr, GroupKind::Glr}) {
        const TangentImage t = tangent_image(a, g);
        const auto c = vdim(t.basis);
        const auto o = jet_oracle(a, g, 8);
        if (c && o) {
          ++finite;
          CHECK(*c == o->codim);
          CHECK(predeterminacy(t) == o->p);
          const DetermResult d = determinacy_bound(t);
          CHECK(*d.determ_bound == 2 * *d.pre_bound - *d.order + 2);
        }
        if (!c) CHECK_FALSE(predeterminacy(t));
        if (g == GroupKind::RightR) prev_right = c;
        if (g == GroupKind::Gl) prev_left = c;
        if ((g == GroupKind::Gl || g == GroupKind::Gr) && c && prev_right) CHECK(*prev_right >= *c);
        if (g == GroupKind::Glr && c && prev_left) CHECK(*prev_left >= *c);
        if (g == GroupKind::Glr && !c) CHECK_FALSE(prev_left);
      }
    }
  }
  CHECK(finite > 20);
}

TEST_CASE("predeterminacy loop invariant") {
  const auto r = make_ring(0, {"x", "y"});
  const TangentImage t = tangent_image(M(r, {{"x^3 + y^4"}}), GroupKind::Gl);
  const int p = *predeterminacy(t);
  const Coef one = r->field().one();
  bool some_nonzero = false;
  for (const auto& m : monomials_up_to(2, p + 1)) {
    const auto nf = mora_nf(Vect::monomial(t.basis.ring(), 1, one, m), t.basis.gens()).nf;
    if (m.deg == p + 1) CHECK(nf.is_zero());
    if (m.deg == p && !nf.is_zero()) some_nonzero = true;
  }
  CHECK(some_nonzero);
}

TEST_CASE("infinite codimension over the rationals") {
  const auto r = make_ring(0, {"x", "y"});
  const MatrixSeries a = M(r, {{"-4*x^2*y + 2*x*y^2", "-2*y - 4*y^2"}, {"4*y", "-4*y + 3*x^2*y"}});
  const TangentImage t = tangent_image(a, GroupKind::Gr);
  CHECK_FALSE(vdim(t.basis));
  CHECK(t.basis.gens().size() == 5);
  CHECK_FALSE(predeterminacy(t));
}
