#include "dkit/orbit.hpp"

#include <numeric>
#include <unordered_map>

namespace dkit {

namespace {

bool has_left(GroupKind g) { return g == GroupKind::Gl || g == GroupKind::Glr; }
bool has_right(GroupKind g) { return g == GroupKind::Gr || g == GroupKind::Glr; }

std::string idx(std::size_t i) { return std::to_string(i); }

// Identity-plus-parameters matrix over the joint ring:
// entry ij = delta_ij + sum_a P_i_j_a x^a.
std::vector<Poly> unit_matrix(const RingPtr& ring, std::size_t dim, std::size_t first_param,
                              const std::vector<ModMonomial>& monos, std::size_t s) {
  std::vector<Poly> out;
  std::size_t next = first_param;
  const Coef one = ring->field().one();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<Term> terms;
      if (i == j) terms.push_back(Term{one, ModMonomial::one(ring->nvars())});
      for (const auto& mono : monos) {
        Exponents e(ring->nvars(), 0);
        for (std::size_t v = 0; v < s; ++v) e[v] = mono.exps[v];
        e[next++] = 1;
        terms.push_back(Term{one, ModMonomial(std::move(e))});
      }
      out.push_back(Vect::from_terms(ring, 1, std::move(terms)));
    }
  return out;
}

std::vector<Poly> matrix_product(const std::vector<Poly>& a, const std::vector<Poly>& b, std::size_t rows,
                                 std::size_t inner, std::size_t cols, int k, const VarMask& mask) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Poly acc(a.front().ring());
      for (std::size_t l = 0; l < inner; ++l) acc = acc + truncated_product(a[i * inner + l], b[l * cols + j], k, mask);
      out.push_back(std::move(acc));
    }
  return out;
}

// Coefficients of every matrix entry with respect to every coordinate slot.
std::vector<Poly> slot_coefficients(const MatrixSeries& b, const JetGroupPresentation& pres, const RingPtr& param_ring) {
  const auto x_idx = pres.x_indices();
  std::vector<Poly> out;
  const auto slots = coordinate_slots(pres.m, pres.n, pres.s, pres.k);
  std::vector<std::unordered_map<ModMonomial, Poly, ModMonomialHash>> per_entry(pres.m * pres.n);
  for (std::size_t e = 0; e < per_entry.size(); ++e)
    for (auto& entry : collect_coefficients(b.entries()[e], x_idx, param_ring))
      per_entry[e].emplace(entry.x_monomial, std::move(entry.coefficient));
  for (const auto& slot : slots) {
    const auto& table = per_entry[slot.row * pres.n + slot.col];
    auto it = table.find(slot.x_monomial);
    out.push_back(it == table.end() ? Poly(param_ring) : it->second);
  }
  return out;
}

}  // namespace

std::int64_t group_dimension(GroupKind group, std::int64_t m, std::int64_t n, std::int64_t s, std::int64_t k) {
  const std::int64_t c = binomial(s + k, k);
  std::int64_t blocks = s;
  if (has_left(group)) blocks += m * m;
  if (has_right(group)) blocks += n * n;
  return blocks * c - s;
}

std::vector<std::size_t> JetGroupPresentation::x_indices() const {
  std::vector<std::size_t> out(s);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

RingPtr JetGroupPresentation::param_ring(Ordering ordering) const {
  return Ring::make(joint_ring->field(), param_names, ordering);
}

std::vector<CoordinateSlot> coordinate_slots(std::size_t m, std::size_t n, std::size_t s, int k) {
  const auto monos = monomials_up_to(s, k);
  std::vector<CoordinateSlot> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& mono : monos) out.push_back(CoordinateSlot{i, j, mono});
  return out;
}

std::vector<Coef> jet_coordinates(const MatrixSeries& a, int k) {
  std::vector<Coef> out;
  for (const auto& slot : coordinate_slots(a.rows(), a.cols(), a.ring()->nvars(), k))
    out.push_back(a.at(slot.row, slot.col).coefficient(slot.x_monomial));
  return out;
}

GenericElement generic_element(int k, GroupKind group, const MatrixSeries& a) {
  if (k < 0) throw std::invalid_argument("jet level must be nonnegative");
  if (!a.in_maximal_ideal()) throw NotInMaximalIdeal();
  const RingPtr& xr = a.ring();
  const std::size_t s = xr->nvars(), m = a.rows(), n = a.cols();
  const auto monos = monomials_up_to(s, k);

  JetGroupPresentation pres;
  pres.k = k;
  pres.group = group;
  pres.m = m;
  pres.n = n;
  pres.s = s;
  auto& names = pres.param_names;
  if (has_left(group))
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= m; ++j)
        for (std::size_t t = 0; t < monos.size(); ++t) names.push_back("U_" + idx(i) + "_" + idx(j) + "_" + idx(t));
  if (has_right(group))
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t t = 0; t < monos.size(); ++t) names.push_back("V_" + idx(i) + "_" + idx(j) + "_" + idx(t));
  const std::size_t g_start = names.size();
  if (k >= 1)
    for (std::size_t i = 1; i <= s; ++i)
      for (std::size_t j = 1; j <= s; ++j) names.push_back("G_" + idx(i) + "_" + idx(j));
  const std::size_t h_start = names.size();
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t t = 0; t < monos.size(); ++t)
      if (monos[t].deg >= 2) names.push_back("H_" + idx(i) + "_" + idx(t));

  std::vector<std::string> all = xr->var_names();
  all.insert(all.end(), names.begin(), names.end());
  pres.joint_ring = Ring::make(xr->field(), std::move(all), Ordering::global_degree());
  const RingPtr& joint = pres.joint_ring;
  const std::size_t nv = joint->nvars();
  const Coef one = xr->field().one();

  // coordinate change
  std::vector<ModMonomial> higher;
  for (const auto& mono : monos)
    if (mono.deg >= 2) higher.push_back(mono);
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Term> terms;
    terms.push_back(Term{one, ModMonomial::variable(nv, i)});
    if (k >= 1)
      for (std::size_t j = 0; j < s; ++j) {
        Exponents e(nv, 0);
        e[j] = 1;
        e[s + g_start + i * s + j] = 1;
        terms.push_back(Term{one, ModMonomial(std::move(e))});
      }
    for (std::size_t t = 0; t < higher.size(); ++t) {
      Exponents e(nv, 0);
      for (std::size_t v = 0; v < s; ++v) e[v] = higher[t].exps[v];
      e[s + h_start + i * higher.size() + t] = 1;
      terms.push_back(Term{one, ModMonomial(std::move(e))});
    }
    pres.coordinate_images.push_back(Vect::from_terms(joint, 1, std::move(terms)));
  }
  std::size_t next = s;
  if (has_left(group)) {
    pres.left = unit_matrix(joint, m, next, monos, s);
    next += m * m * monos.size();
  }
  if (has_right(group)) pres.right = unit_matrix(joint, n, next, monos, s);

  VarMask mask(nv, 0);
  for (std::size_t v = 0; v < s; ++v) mask[v] = 1;

  std::vector<Poly> entries;
  const MatrixSeries truncated = a.jet(k);
  for (const auto& e : truncated.entries()) entries.push_back(substitute(e, pres.coordinate_images, k, mask));
  if (has_left(group)) entries = matrix_product(pres.left, entries, m, m, n, k, mask);
  if (has_right(group)) entries = matrix_product(entries, pres.right, m, n, n, k, mask);

  MatrixSeries b(joint, m, n, std::move(entries));
  return GenericElement{std::move(pres), std::move(b)};
}

OrbitEquations orbit_equations(int k, const MatrixSeries& a, GroupKind group) {
  GenericElement ge = generic_element(k, group, a);
  const auto& pres = ge.presentation;
  const RingPtr params = pres.param_ring(Ordering::global_degree());
  std::vector<Poly> coords = slot_coefficients(ge.b, pres, params);
  const std::size_t np = pres.param_count(), t = coords.size();

  std::vector<std::string> u_names;
  for (std::size_t i = 1; i <= t; ++i) u_names.push_back("u" + idx(i));
  std::vector<std::string> joint_names = pres.param_names;
  joint_names.insert(joint_names.end(), u_names.begin(), u_names.end());
  const RingPtr joint = Ring::make(params->field(), std::move(joint_names), Ordering::global_degree());
  const RingPtr u_ring = Ring::make(params->field(), u_names, Ordering::global_degree());

  std::vector<std::size_t> embed(np);
  std::iota(embed.begin(), embed.end(), 0);
  std::vector<Poly> graph;
  for (std::size_t i = 0; i < t; ++i) graph.push_back(Vect::variable(joint, np + i) - map_variables(coords[i], joint, embed));
  std::vector<std::size_t> elim(np);
  std::iota(elim.begin(), elim.end(), 0);

  // parameters are absent from the result, so their image index is irrelevant
  std::vector<std::size_t> project(np + t, 0);
  for (std::size_t i = 0; i < t; ++i) project[np + i] = i;
  std::vector<Poly> eqs;
  for (const auto& f : eliminate(graph, elim)) eqs.push_back(map_variables(f, u_ring, project));
  return OrbitEquations{std::move(ge), std::move(coords), u_ring, std::move(eqs)};
}

StabilizerEquations stabilizer_equations(int k, const MatrixSeries& a, GroupKind group, Ordering ordering) {
  GenericElement ge = generic_element(k, group, a);
  const auto& pres = ge.presentation;
  const RingPtr params = pres.param_ring(ordering);
  std::vector<Poly> coords = slot_coefficients(ge.b, pres, params);
  const auto base = jet_coordinates(a, k);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = coords[i] - Vect::constant(params, base[i]);
  return StabilizerEquations{std::move(ge), std::move(coords)};
}

std::string_view method_name(OrbitMethod m) { return m == OrbitMethod::Eliminate ? "eliminate" : "stabilizer"; }

namespace {

struct Prepared {
  std::int64_t c_image;
  int p;
  int k;
  std::int64_t t;
  std::int64_t dim_group;
};

Prepared prepare(const MatrixSeries& a, GroupKind group, const OrbitOptions& opts) {
  const TangentImage ti = tangent_image(a, group);
  const auto c = vdim(ti.basis);
  if (!c) throw InfiniteCodimension();
  const int p = *predeterminacy(ti);
  const int k = opts.jet_level.value_or(p);
  if (k < p)
    throw std::invalid_argument("jet level " + std::to_string(k) + " is below the pre-determinacy bound " +
                                std::to_string(p));
  const auto s = static_cast<std::int64_t>(a.ring()->nvars());
  const auto m = static_cast<std::int64_t>(a.rows()), n = static_cast<std::int64_t>(a.cols());
  const std::int64_t dim_group = group_dimension(group, m, n, s, k);
  if (static_cast<std::size_t>(dim_group) > opts.param_cap)
    throw ParameterCapExceeded(static_cast<std::size_t>(dim_group), opts.param_cap);
  return Prepared{*c, p, k, jet_space_dim(m, n, s, k), dim_group};
}

OrbitReport base_report(const Prepared& pr, OrbitMethod method) {
  OrbitReport r;
  r.method = method;
  r.pre_bound = pr.p;
  r.k_used = pr.k;
  r.t = pr.t;
  r.dim_group = pr.dim_group;
  r.c_tangent_image = pr.c_image;
  return r;
}

}  // namespace

OrbitReport codim_tangent_space_via_orbit(const MatrixSeries& a, GroupKind group, const OrbitOptions& opts) {
  const Prepared pr = prepare(a, group, opts);
  OrbitEquations oe = orbit_equations(pr.k, a, group);
  const StdBasis ideal = standard_basis(oe.u_ring, 1, oe.equations);
  OrbitReport r = base_report(pr, OrbitMethod::Eliminate);
  r.dim_orbit = krull_dim(ideal);
  r.dim_stab = r.dim_group - r.dim_orbit;
  r.c_tangent_space = r.t - r.dim_orbit;
  r.separable = r.c_tangent_space == r.c_tangent_image;
  r.equations = std::move(oe.equations);
  r.equation_ring = oe.u_ring;
  return r;
}

OrbitReport codim_tangent_space_via_stab(const MatrixSeries& a, GroupKind group, const OrbitOptions& opts) {
  const Prepared pr = prepare(a, group, opts);
  const Ordering ord = opts.stabilizer_local ? Ordering::local_degree() : Ordering::global_degree();
  StabilizerEquations se = stabilizer_equations(pr.k, a, group, ord);
  const RingPtr params = se.element.presentation.param_ring(ord);
  const StdBasis ideal = standard_basis(params, 1, se.equations);
  OrbitReport r = base_report(pr, OrbitMethod::Stabilizer);
  r.dim_stab = krull_dim(ideal);
  r.dim_orbit = r.dim_group - r.dim_stab;
  r.c_tangent_space = r.t - r.dim_group + r.dim_stab;
  r.separable = r.c_tangent_space == r.c_tangent_image;
  r.equations = std::move(se.equations);
  r.equation_ring = params;
  return r;
}

OrbitReport separability_verdict(const MatrixSeries& a, GroupKind group, const OrbitOptions& opts) {
  return opts.method == OrbitMethod::Eliminate ? codim_tangent_space_via_orbit(a, group, opts)
                                               : codim_tangent_space_via_stab(a, group, opts);
}

}  // namespace dkit
