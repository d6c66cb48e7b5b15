#include "dkit/orbit.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace dkit;
using namespace dkit::testing;

namespace {

// B with every parameter set to zero, moved back to A's ring.
Vect at_identity(const GenericElement& ge, std::size_t i) {
  const auto& pres = ge.presentation;
  std::vector<Term> terms;
  for (const auto& t : ge.b.entries()[i].terms()) {
    bool free = true;
    for (std::size_t v = pres.s; v < t.mono.nvars(); ++v) free = free && t.mono.exps[v] == 0;
    if (free) terms.push_back(t);
  }
  return Vect::from_terms(pres.joint_ring, 1, std::move(terms));
}

}  // namespace

TEST_CASE("parameter inventory") {
  const auto r = make_ring(2, {"x", "y"});
  const GenericElement ge = generic_element(2, GroupKind::Gl, M(r, {{"x^2 + y^3"}}));
  CHECK(ge.presentation.param_count() == 16);
  const GenericElement gr = generic_element(1, GroupKind::RightR, M(r, {{"x^2 + y^3"}}));
  CHECK(gr.presentation.param_names == std::vector<std::string>{"G_1_1", "G_1_2", "G_2_1", "G_2_2"});
  CHECK(group_dimension(GroupKind::RightR, 1, 1, 2, 1) == 4);
  CHECK(group_dimension(GroupKind::Glr, 2, 2, 2, 2) == 58);
}

TEST_CASE("parameter counts match the group dimension formula") {
  std::mt19937_64 rng(41);
  int tried = 0;
  for (int i = 0; i < 200 && tried < 40; ++i) {
    const std::size_t m = 1 + rng() % 2, n = 1 + rng() % 2, s = 1 + rng() % 3;
    const int k = static_cast<int>(rng() % 4);
    if (binomial(static_cast<std::int64_t>(s) + k, k) > 20) continue;
    ++tried;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < s; ++v) names.push_back("x" + std::string(1, static_cast<char>('a' + v)));
    const auto r = make_ring(3, names);
    const MatrixSeries a = random_matrix(rng, r, m, n, 2);
    for (GroupKind g : {GroupKind::RightR, GroupKind::Gl, GroupKind::Gr, GroupKind::Glr}) {
      const auto ge = generic_element(k, g, a);
      CHECK(static_cast<std::int64_t>(ge.presentation.param_count()) ==
            group_dimension(g, static_cast<std::int64_t>(m), static_cast<std::int64_t>(n),
                            static_cast<std::int64_t>(s), k));
    }
  }
  CHECK(tried >= 20);
}

TEST_CASE("the parameter origin is the identity") {
  const auto r = make_ring(0, {"x", "y"});
  const MatrixSeries a = M(r, {{"x^2 + y^3", "x*y"}, {"y", "x^3"}});
  for (GroupKind g : {GroupKind::RightR, GroupKind::Gl, GroupKind::Gr, GroupKind::Glr}) {
    const GenericElement ge = generic_element(2, g, a);
    const std::vector<std::size_t> embed{0, 1};
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(at_identity(ge, i) == map_variables(a.jet(2).entries()[i], ge.presentation.joint_ring, embed));
  }
}

TEST_CASE("orbit and stabilizer of x under right equivalence at level 1") {
  const auto r = make_ring(0, {"x"});
  const MatrixSeries a = M(r, {{"x"}});
  const OrbitEquations oe = orbit_equations(1, a, GroupKind::RightR);
  CHECK(rendered(oe.equations) == std::vector<std::string>{"u1"});
  CHECK(krull_dim(standard_basis(oe.u_ring, 1, oe.equations)) == 1);
  const StabilizerEquations se = stabilizer_equations(1, a, GroupKind::RightR);
  CHECK(rendered(se.equations) == std::vector<std::string>{"0", "G_1_1"});
  const auto pr = se.element.presentation.param_ring(Ordering::local_degree());
  CHECK(krull_dim(standard_basis(pr, 1, se.equations)) == 0);
}

TEST_CASE("cusp in characteristic 2 under contact: both methods agree") {
  const auto r = make_ring(2, {"x", "y"});
  const MatrixSeries a = M(r, {{"x^2 + y^3"}});
  for (OrbitMethod method : {OrbitMethod::Stabilizer, OrbitMethod::Eliminate}) {
    OrbitOptions o;
    o.method = method;
    const OrbitReport rep = separability_verdict(a, GroupKind::Gl, o);
    CHECK(rep.k_used == 2);
    CHECK(rep.t == 6);
    CHECK(rep.dim_group == 16);
    CHECK(rep.dim_stab == 14);
    CHECK(rep.dim_orbit == 2);
    CHECK(rep.c_tangent_space == 4);
    CHECK(rep.c_tangent_image == 5);
    CHECK_FALSE(rep.separable);
  }
}

TEST_CASE("verdict is stable one level above the bound") {
  const auto r = make_ring(2, {"x", "y"});
  OrbitOptions o;
  o.jet_level = 3;
  const OrbitReport rep = separability_verdict(M(r, {{"x^2 + y^3"}}), GroupKind::Gl, o);
  CHECK(rep.c_tangent_space == 4);
  CHECK_FALSE(rep.separable);
}

TEST_CASE("separable cases") {
  const auto q = make_ring(0, {"x", "y"});
  const auto r3 = make_ring(3, {"x", "y"});
  for (const auto& a : {M(q, {{"x^2 + y^3"}}), M(r3, {{"x"}})}) {
    const OrbitReport s = codim_tangent_space_via_stab(a, GroupKind::Gl);
    const OrbitReport e = codim_tangent_space_via_orbit(a, GroupKind::Gl);
    CHECK(s.c_tangent_space == e.c_tangent_space);
    CHECK(s.c_tangent_space == s.c_tangent_image);
    CHECK(s.separable);
  }
  const OrbitReport germ = codim_tangent_space_via_stab(M(r3, {{"x"}}), GroupKind::Gl);
  CHECK(germ.k_used == 0);
  CHECK(germ.t == 1);
  CHECK(germ.dim_group == 1);
  CHECK(germ.dim_stab == 1);
  CHECK(germ.c_tangent_space == 1);
}

TEST_CASE("orbit equations vanish on the orbit") {
  std::mt19937_64 rng(8);
  const auto r = make_ring(5, {"x", "y"});
  const MatrixSeries a = M(r, {{"x^2 + y^3"}});
  const OrbitEquations oe = orbit_equations(2, a, GroupKind::Gl);
  const auto base = jet_coordinates(a, 2);
  for (const auto& f : oe.equations) CHECK(evaluate(f, base).is_zero());
  const Field& k = r->field();
  for (int i = 0; i < 10; ++i) {
    std::vector<Coef> params;
    for (std::size_t j = 0; j < oe.element.presentation.param_count(); ++j) params.push_back(random_coef(rng, k, false));
    std::vector<Coef> point;
    for (const auto& c : oe.coordinates) point.push_back(evaluate(c, params));
    for (const auto& f : oe.equations) CHECK(evaluate(f, point).is_zero());
  }
}

TEST_CASE("stabilizer equations vanish at the identity") {
  const auto r = make_ring(3, {"x", "y"});
  const StabilizerEquations se = stabilizer_equations(2, M(r, {{"x^2", "y^2"}}), GroupKind::Glr);
  const std::vector<Coef> origin(se.element.presentation.param_count(), r->field().zero());
  for (const auto& f : se.equations) CHECK(evaluate(f, origin).is_zero());
}

TEST_CASE("guards") {
  const auto r = make_ring(2, {"x", "y"});
  OrbitOptions o;
  o.param_cap = 10;
  CHECK_THROWS_AS(separability_verdict(M(r, {{"x^2 + y^3"}}), GroupKind::Gl, o), ParameterCapExceeded);
  CHECK_THROWS_AS(separability_verdict(M(r, {{"x^2 + y^3"}}), GroupKind::RightR), InfiniteCodimension);
  OrbitOptions low;
  low.jet_level = 1;
  CHECK_THROWS_AS(separability_verdict(M(r, {{"x^2 + y^3"}}), GroupKind::Gl, low), std::invalid_argument);
  CHECK_THROWS_AS(generic_element(1, GroupKind::Gl, M(r, {{"1 + x"}})), NotInMaximalIdeal);
}

TEST_CASE("stabilizer dimension under a global ordering") {
  const auto r = make_ring(2, {"x", "y"});
  OrbitOptions o;
  o.stabilizer_local = false;
  const OrbitReport rep = codim_tangent_space_via_stab(M(r, {{"x^2 + y^3"}}), GroupKind::Gl, o);
  CHECK(rep.dim_stab == 14);
}
