#include "dkit/determinacy.hpp"

#include <algorithm>

namespace dkit {

std::string group_name(GroupKind g) {
  switch (g) {
    case GroupKind::RightR: return "R";
    case GroupKind::Gl: return "G_l";
    case GroupKind::Gr: return "G_r";
    case GroupKind::Glr: return "G_lr";
  }
  return "?";
}

namespace {

bool has_left_block(GroupKind g) { return g == GroupKind::Gl || g == GroupKind::Glr; }
bool has_right_block(GroupKind g) { return g == GroupKind::Gr || g == GroupKind::Glr; }

void push_nonzero(std::vector<Vect>& out, Vect v) {
  if (!v.is_zero()) out.push_back(std::move(v));
}

}  // namespace

std::vector<Vect> tangent_image_generators(const MatrixSeries& a_in, GroupKind group) {
  if (!a_in.in_maximal_ideal()) throw NotInMaximalIdeal();
  const RingPtr local = a_in.ring()->with_ordering(Ordering::local_degree());
  const MatrixSeries a = a_in.in_ring(local);
  const std::size_t m = a.rows(), n = a.cols();
  const Poly zero(local);
  std::vector<Vect> gens;

  if (has_left_block(group)) {
    // E_pq * A: row p is row q of A
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        std::vector<Poly> e(m * n, zero);
        for (std::size_t j = 0; j < n; ++j) e[p * n + j] = a.at(q, j);
        push_nonzero(gens, MatrixSeries(local, m, n, std::move(e)).flatten());
      }
  }
  if (has_right_block(group)) {
    // A * E_hl: column l is column h of A
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t l = 0; l < n; ++l) {
        std::vector<Poly> e(m * n, zero);
        for (std::size_t i = 0; i < m; ++i) e[i * n + l] = a.at(i, h);
        push_nonzero(gens, MatrixSeries(local, m, n, std::move(e)).flatten());
      }
  }
  const Vect flat = a.flatten();
  const std::size_t s = local->nvars();
  for (std::size_t nu = 0; nu < s; ++nu) {
    const Vect d = partial_derivative_vect(flat, nu);
    for (std::size_t mu = 0; mu < s; ++mu) push_nonzero(gens, d.shifted(ModMonomial::variable(s, mu)));
  }
  return gens;
}

TangentImage tangent_image(const MatrixSeries& a, GroupKind group) {
  auto gens = tangent_image_generators(a, group);
  const RingPtr local = a.ring()->with_ordering(Ordering::local_degree());
  const int rank = static_cast<int>(a.rows() * a.cols());
  return TangentImage{standard_basis(local, rank, gens), group, a.in_ring(local)};
}

std::optional<QuotientBasis> basis_codim(const TangentImage& t) {
  const auto c = vdim(t.basis);
  if (!c) return std::nullopt;
  return QuotientBasis{kbase(t.basis), *c};
}

std::optional<int> predeterminacy(const TangentImage& t) {
  // all of degree p+1 lies in the leading module iff m^(p+1) * M_{m,n} does in the image
  const auto d = power_bound(t.basis);
  if (!d) return std::nullopt;
  return std::max(*d, 1) - 1;
}

std::optional<int> predeterminacy(const MatrixSeries& a, GroupKind group) {
  return predeterminacy(tangent_image(a, group));
}

DetermResult determinacy_bound(const TangentImage& t) {
  DetermResult r;
  r.order = t.source.order();
  r.codim = vdim(t.basis);
  if (!r.codim) return r;
  r.pre_bound = predeterminacy(t);
  if (r.pre_bound && r.order) r.determ_bound = 2 * *r.pre_bound - *r.order + 2;
  return r;
}

DetermResult determinacy_bound(const MatrixSeries& a, GroupKind group) {
  return determinacy_bound(tangent_image(a, group));
}

Verdict determinacy_verdict(const DetermResult& r, std::size_t cols, GroupKind group) {
  if (r.codim) return Verdict::FinitelyDetermined;
  if (cols == 1 && (group == GroupKind::Gl || group == GroupKind::Glr)) return Verdict::NotFinitelyDetermined;
  return Verdict::Undecided;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FinitelyDetermined: return "finitely determined";
    case Verdict::NotFinitelyDetermined: return "not finitely determined";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

}  // namespace dkit
