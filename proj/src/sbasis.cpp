#include "dkit/sbasis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace dkit {

namespace {

// Calls visit(m) for every monomial of component comp outside the leading
// module, in no particular order, stopping at total degree cap.
template <class Visit>
void walk_staircase(const std::vector<ModMonomial>& leads, std::size_t nvars, int comp, int cap, Visit&& visit) {
  auto in_module = [&](const ModMonomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const ModMonomial& l) { return l.divides(m); });
  };
  std::vector<std::pair<ModMonomial, std::size_t>> stack;
  ModMonomial one = ModMonomial::one(nvars, comp);
  if (in_module(one)) return;
  stack.emplace_back(std::move(one), 0);
  while (!stack.empty()) {
    auto [m, first] = std::move(stack.back());
    stack.pop_back();
    visit(m);
    if (m.deg >= cap) continue;
    // only raise variables >= the last raised one so each monomial is visited once
    for (std::size_t v = first; v < nvars; ++v) {
      ModMonomial next = m;
      next.exps[v] = static_cast<Exponent>(next.exps[v] + 1);
      next.deg += 1;
      if (!in_module(next)) stack.emplace_back(std::move(next), v);
    }
  }
}

bool staircase_finite(const std::vector<ModMonomial>& leads, std::size_t nvars, int rank) {
  for (int c = 0; c < rank; ++c) {
    bool has_unit = false;
    std::vector<char> pure(nvars, 0);
    for (const auto& l : leads) {
      if (l.comp != c) continue;
      if (l.deg == 0) has_unit = true;
      std::size_t support = 0, var = 0;
      for (std::size_t i = 0; i < nvars; ++i)
        if (l.exps[i] != 0) {
          ++support;
          var = i;
        }
      if (support == 1) pure[var] = 1;
    }
    if (!has_unit && std::find(pure.begin(), pure.end(), 0) != pure.end()) return false;
  }
  return true;
}

// Smallest D with every monomial of degree D (in every component) in the
// module generated by leads; nothing if the staircase is infinite.
std::optional<int> lead_power_bound(const std::vector<ModMonomial>& leads, std::size_t nvars, int rank) {
  if (!staircase_finite(leads, nvars, rank)) return std::nullopt;
  int top = -1;
  for (int c = 0; c < rank; ++c)
    walk_staircase(leads, nvars, c, std::numeric_limits<int>::max(), [&](const ModMonomial& m) { top = std::max(top, m.deg); });
  return top + 1;
}

}  // namespace

// ---------------------------------------------------------------- normal forms

NormalForm mora_nf(const Vect& f, std::span<const Vect> basis, std::optional<int> degree_cap) {
  for (const auto& g : basis) {
    if (!g.ring()->same_as(*f.ring())) throw OrderingMismatch("basis and input use different rings or orderings");
    if (g.rank() != f.rank()) throw RankMismatch("basis and input have different ranks");
  }
  const Field& field = f.ring()->field();
  Vect h = f;
  const bool capped = degree_cap && f.ring()->ordering().is_local();
  if (capped) h = jet(h, *degree_cap);

  if (!f.ring()->ordering().is_local()) {
    while (!h.is_zero()) {
      auto it = std::find_if(basis.begin(), basis.end(),
                             [&](const Vect& g) { return !g.is_zero() && g.lead().divides(h.lead()); });
      if (it == basis.end()) break;
      h = h.minus_multiple(h.lead_coef() / it->lead_coef(), h.lead().quotient(it->lead()), *it);
    }
    return NormalForm{std::move(h), true};
  }

  // Reducer set T: the basis (unit constant 0) followed by earlier
  // intermediate results h_j = u_j f - ..., stored with u_j(0).
  struct Reducer {
    Vect poly;
    int ecart;
    Coef unit0;
  };
  std::deque<Reducer> extra;  // stable addresses while growing
  std::vector<int> basis_ecart;
  basis_ecart.reserve(basis.size());
  for (const auto& g : basis) basis_ecart.push_back(g.is_zero() ? 0 : g.ecart());

  Coef unit0 = field.one();
  while (!h.is_zero()) {
    const ModMonomial& lm = h.lead();
    const Vect* best = nullptr;
    int best_ecart = std::numeric_limits<int>::max();
    Coef best_unit = field.zero();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero() || basis_ecart[i] >= best_ecart || !basis[i].lead().divides(lm)) continue;
      best = &basis[i];
      best_ecart = basis_ecart[i];
    }
    for (const auto& r : extra) {
      if (r.ecart >= best_ecart || !r.poly.lead().divides(lm)) continue;
      best = &r.poly;
      best_ecart = r.ecart;
      best_unit = r.unit0;
    }
    if (best == nullptr) break;

    const int h_ecart = h.ecart();
    const Coef c = h.lead_coef() / best->lead_coef();
    const ModMonomial t = lm.quotient(best->lead());
    const Coef used_unit = best_unit;
    if (best_ecart > h_ecart) extra.push_back(Reducer{h, h_ecart, unit0});
    if (t.is_constant()) unit0 -= c * used_unit;
    h = h.minus_multiple(c, t, *best);
    if (capped) h = jet(h, *degree_cap);
  }
  const bool unit_ok = !unit0.is_zero();
  return NormalForm{std::move(h), unit_ok};
}

Vect reduce_full(const Vect& f, std::span<const Vect> basis) {
  std::vector<Term> done;
  Vect h = f;
  while (!h.is_zero()) {
    auto it = std::find_if(basis.begin(), basis.end(),
                           [&](const Vect& g) { return !g.is_zero() && g.lead().divides(h.lead()); });
    if (it == basis.end()) {
      done.push_back(h.lead_term());
      h = h.tail();
    } else {
      h = h.minus_multiple(h.lead_coef() / it->lead_coef(), h.lead().quotient(it->lead()), *it);
    }
  }
  return Vect::from_terms(f.ring(), f.rank(), std::move(done));
}

Vect s_vector(const Vect& f, const Vect& g) {
  if (f.is_zero() || g.is_zero() || f.lead().comp != g.lead().comp) return Vect(f.ring(), f.rank());
  const ModMonomial l = f.lead().lcm(g.lead());
  const Vect a = f.shifted(l.quotient(f.lead())).scaled(f.lead_coef().inverse());
  return a.minus_multiple(g.lead_coef().inverse(), l.quotient(g.lead()), g);
}

// ---------------------------------------------------------------- completion

std::vector<ModMonomial> StdBasis::lead_monomials() const {
  std::vector<ModMonomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.lead());
  return out;
}

namespace {

struct Pair {
  std::size_t i, j;
  ModMonomial lcm;
  int sugar;
};

// Under a local ordering the completion works with implicit homogenizations:
// an element f of homogenizing degree d stands for t^d f(x/t), whose leading
// term is lead(f) * t^(d - deg lead(f)).  Reductions respect that degree, so
// no intermediate result ever exceeds it.
struct HomLead {
  const ModMonomial& x;
  int t;
  bool divides(const ModMonomial& ox, int ot) const { return t <= ot && x.divides(ox); }
};

class Completion {
public:
  Completion(const RingPtr& ring, int rank)
      : ring_(ring), rank_(rank), ord_(ring->ordering()), local_(ord_.is_local()) {}

  void run(std::span<const Vect> gens) {
    std::vector<std::pair<Vect, int>> input;
    for (const auto& g : gens) {
      if (!g.ring()->same_as(*ring_)) throw OrderingMismatch("generator lives in a different ring");
      if (g.rank() != rank_) throw RankMismatch("generator has the wrong rank");
      if (!g.is_zero()) input.emplace_back(g, g.degree());
    }
    std::stable_sort(input.begin(), input.end(), [&](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return ord_.greater(b.first.lead(), a.first.lead());
    });
    for (auto& [g, sugar] : input) {
      Vect h = reduce(g, sugar);
      if (!h.is_zero()) insert(std::move(h), sugar);
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return ord_.greater(b.lcm, a.lcm);
      });
      const Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      if (polys_[p.i].is_zero() || polys_[p.j].is_zero()) continue;
      Vect s = s_vector(polys_[p.i], polys_[p.j]);
      if (s.is_zero()) continue;
      Vect h = reduce(std::move(s), p.sugar);
      if (!h.is_zero()) insert(std::move(h), p.sugar);
    }
  }

  StdBasis result() && {
    std::vector<Vect> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (!redundant_[i] && !polys_[i].is_zero()) out.push_back(polys_[i]);
    std::stable_sort(out.begin(), out.end(), [&](const Vect& a, const Vect& b) { return a.lead().deg < b.lead().deg; });
    // keep the first of each chain of divisible leading monomials
    std::vector<Vect> minimal;
    for (auto& g : out) {
      const bool covered = std::any_of(minimal.begin(), minimal.end(), [&](const Vect& m) { return m.lead().divides(g.lead()); });
      if (!covered) minimal.push_back(std::move(g));
    }
    if (!local_) {
      for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Vect> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
          if (j != i) others.push_back(minimal[j]);
        const Vect tail = reduce_full(minimal[i].tail(), others);
        minimal[i] = (Vect::monomial(ring_, rank_, minimal[i].lead_coef(), minimal[i].lead()) + tail).monic();
      }
    } else {
      for (auto& g : minimal) g = g.monic();
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Vect& a, const Vect& b) { return ord_.greater(a.lead(), b.lead()); });
    return StdBasis(ring_, rank_, std::move(minimal));
  }

private:
  HomLead hlead(std::size_t i) const {
    const ModMonomial& l = polys_[i].lead();
    return {l, local_ ? sugar_[i] - l.deg : 0};
  }
  // t-exponent of the homogenized lcm of a pair
  int pair_t(const Pair& p) const { return local_ ? p.sugar - p.lcm.deg : 0; }

  Vect reduce(Vect h, int degree) const {
    if (!local_) return mora_nf(h, polys_).nf;
    if (cap_) h = jet(h, *cap_);
    while (!h.is_zero()) {
      const ModMonomial& lm = h.lead();
      const int room = degree - lm.deg;
      const Vect* best = nullptr;
      int best_ecart = std::numeric_limits<int>::max();
      for (std::size_t i = 0; i < polys_.size(); ++i) {
        if (polys_[i].is_zero() || !hlead(i).divides(lm, room)) continue;
        const int e = polys_[i].ecart();
        if (e < best_ecart) {
          best = &polys_[i];
          best_ecart = e;
        }
      }
      if (best == nullptr) break;
      h = h.minus_multiple(h.lead_coef() / best->lead_coef(), lm.quotient(best->lead()), *best);
      if (cap_) h = jet(h, *cap_);
    }
    return h;
  }

  void insert(Vect h, int sugar) {
    h = h.monic();
    if (!local_ && !polys_.empty()) {
      const Vect tail = reduce_full(h.tail(), polys_);
      h = Vect::monomial(ring_, rank_, h.lead_coef(), h.lead()) + tail;
    }
    const std::size_t r = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    redundant_.push_back(0);
    const HomLead lh = hlead(r);

    // Gebauer-Moeller update on the (homogenized) leading monomials.
    std::vector<Pair> fresh;
    for (std::size_t j = 0; j < r; ++j) {
      if (redundant_[j] || polys_[j].is_zero() || polys_[j].lead().comp != lh.x.comp) continue;
      const ModMonomial l = polys_[j].lead().lcm(lh.x);
      const int s = std::max(sugar_[j] + l.deg - polys_[j].lead().deg, sugar + l.deg - lh.x.deg);
      fresh.push_back(Pair{j, r, l, s});
    }
    auto same = [&](const Pair& a, const Pair& b) { return a.lcm == b.lcm && pair_t(a) == pair_t(b); };
    auto divides = [&](const Pair& a, const Pair& b) { return pair_t(a) <= pair_t(b) && a.lcm.divides(b.lcm); };
    std::vector<char> keep(fresh.size(), 1);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b)
        if (a != b && divides(fresh[b], fresh[a]) && !same(fresh[b], fresh[a])) keep[a] = 0;
    const bool ring_case = rank_ == 1;
    std::vector<Pair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool seen = false, any_coprime = false;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (!keep[b] || !same(fresh[b], fresh[a])) continue;
        if (b < a) seen = true;
        const HomLead li = hlead(fresh[b].i);
        if (ring_case && li.x.coprime(lh.x) && (li.t == 0 || lh.t == 0)) any_coprime = true;
      }
      if (!seen && !any_coprime) accepted.push_back(fresh[a]);
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm, pair_t(p))) return false;
      auto hom_lcm_t = [&](std::size_t i) { return std::max(hlead(i).t, lh.t); };
      const ModMonomial li = polys_[p.i].lead().lcm(lh.x);
      const ModMonomial lj = polys_[p.j].lead().lcm(lh.x);
      const bool eq_i = li == p.lcm && hom_lcm_t(p.i) == pair_t(p);
      const bool eq_j = lj == p.lcm && hom_lcm_t(p.j) == pair_t(p);
      return !eq_i && !eq_j;
    });
    pairs_.insert(pairs_.end(), accepted.begin(), accepted.end());

    for (std::size_t j = 0; j < r; ++j)
      if (!redundant_[j] && !polys_[j].is_zero() && lh.divides(polys_[j].lead(), hlead(j).t)) redundant_[j] = 1;
    if (local_) update_cap();
  }

  // Once the leading module holds every monomial of degree D, the submodule
  // contains m^D * M and terms of degree D and above can be dropped; an
  // element led in degree D or more is replaced by its leading term.
  void update_cap() {
    std::vector<ModMonomial> leads;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (!polys_[i].is_zero()) leads.push_back(polys_[i].lead());
    const auto d = lead_power_bound(leads, ring_->nvars(), rank_);
    if (!d || (cap_ && *cap_ <= *d - 1)) return;
    cap_ = *d - 1;
    for (auto& f : polys_) {
      if (f.is_zero()) continue;
      f = f.lead().deg > *cap_ ? Vect::monomial(ring_, rank_, f.lead_coef(), f.lead()) : jet(f, *cap_);
    }
  }

  RingPtr ring_;
  int rank_;
  const Ordering& ord_;
  bool local_;
  std::vector<Vect> polys_;
  std::vector<int> sugar_;
  std::vector<char> redundant_;
  std::vector<Pair> pairs_;
  std::optional<int> cap_;
};

}  // namespace

StdBasis standard_basis(const RingPtr& ring, int rank, std::span<const Vect> gens) {
  Completion c(ring, rank);
  c.run(gens);
  return std::move(c).result();
}

// ---------------------------------------------------------------- staircase

std::optional<int> power_bound(const StdBasis& basis) {
  return lead_power_bound(basis.lead_monomials(), basis.ring()->nvars(), basis.rank());
}

std::optional<std::int64_t> vdim(const StdBasis& basis) {
  const auto leads = basis.lead_monomials();
  const std::size_t n = basis.ring()->nvars();
  if (!staircase_finite(leads, n, basis.rank())) return std::nullopt;
  std::int64_t count = 0;
  for (int c = 0; c < basis.rank(); ++c)
    walk_staircase(leads, n, c, std::numeric_limits<int>::max(), [&](const ModMonomial&) { ++count; });
  return count;
}

std::vector<ModMonomial> kbase(const StdBasis& basis, std::optional<int> degree_cap) {
  const auto leads = basis.lead_monomials();
  const std::size_t n = basis.ring()->nvars();
  if (!degree_cap && !staircase_finite(leads, n, basis.rank())) throw InfiniteDimension();
  std::vector<ModMonomial> out;
  if (degree_cap && *degree_cap < 0) return out;
  const int cap = degree_cap.value_or(std::numeric_limits<int>::max());
  for (int c = 0; c < basis.rank(); ++c)
    walk_staircase(leads, n, c, cap, [&](const ModMonomial& m) { out.push_back(m); });
  const Ordering& ord = basis.ordering();
  std::sort(out.begin(), out.end(), [&](const ModMonomial& a, const ModMonomial& b) { return ord.greater(a, b); });
  return out;
}

int krull_dim(const StdBasis& basis) {
  if (basis.rank() != 1) throw RankError("krull_dim is defined for ideals only");
  const std::size_t n = basis.ring()->nvars();
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& l : basis.lead_monomials()) {
    if (l.deg == 0) return -1;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (l.exps[i] != 0) s.push_back(i);
    supports.push_back(std::move(s));
  }
  // drop supports containing another one
  std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<std::size_t>> minimal;
  for (auto& s : supports) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!dominated) minimal.push_back(std::move(s));
  }

  // minimum transversal by branch and bound
  std::vector<char> chosen(n, 0);
  std::size_t best = n;
  std::function<void(std::size_t)> search = [&](std::size_t count) {
    if (count >= best) return;
    const std::vector<std::size_t>* open = nullptr;
    for (const auto& s : minimal) {
      if (std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v] != 0; })) continue;
      if (open == nullptr || s.size() < open->size()) open = &s;
      if (open->size() == 1) break;
    }
    if (open == nullptr) {
      best = count;
      return;
    }
    if (count + 1 >= best) return;
    for (std::size_t v : *open) {
      chosen[v] = 1;
      search(count + 1);
      chosen[v] = 0;
    }
  };
  search(0);
  return static_cast<int>(n - best);
}

// ---------------------------------------------------------------- elimination

std::vector<Poly> eliminate(std::span<const Poly> gens, std::span<const std::size_t> elim_vars) {
  if (gens.empty()) return {};
  const RingPtr& ring = gens.front().ring();
  const std::size_t n = ring->nvars();
  std::vector<char> is_elim(n, 0);
  for (std::size_t v : elim_vars) is_elim.at(v) = 1;

  std::vector<std::size_t> order;  // new position -> old index
  for (std::size_t v : elim_vars) order.push_back(v);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_elim[i]) order.push_back(i);
  std::vector<std::size_t> to_new(n), to_old(n);
  std::vector<std::string> names;
  for (std::size_t pos = 0; pos < n; ++pos) {
    to_new[order[pos]] = pos;
    to_old[pos] = order[pos];
    names.push_back(ring->var_name(order[pos]));
  }
  const std::size_t e = elim_vars.size();
  const RingPtr block = Ring::make(ring->field(), std::move(names), Ordering::block(e));

  std::vector<Vect> mapped;
  for (const auto& g : gens) {
    if (g.rank() != 1) throw RankError("eliminate expects polynomials");
    mapped.push_back(map_variables(g, block, to_new));
  }
  const StdBasis gb = standard_basis(block, 1, mapped);

  std::vector<Poly> out;
  for (const auto& g : gb.gens()) {
    const auto& ex = g.lead().exps;
    if (std::all_of(ex.begin(), ex.begin() + static_cast<std::ptrdiff_t>(e), [](Exponent x) { return x == 0; }))
      out.push_back(map_variables(g, ring, to_old));
  }
  return out;
}

}  // namespace dkit
