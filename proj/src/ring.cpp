#include "dkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <unordered_map>

namespace dkit {

// ---------------------------------------------------------------- monomials

ModMonomial::ModMonomial(Exponents e, int component) : exps(std::move(e)), comp(component) {
  deg = std::accumulate(exps.begin(), exps.end(), 0);
}

ModMonomial ModMonomial::one(std::size_t nvars, int component) {
  return ModMonomial(Exponents(nvars, 0), component);
}

ModMonomial ModMonomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Exponents e(nvars, 0);
  e.at(index) = power;
  return ModMonomial(std::move(e));
}

bool ModMonomial::divides(const ModMonomial& other) const {
  if (comp != other.comp || deg > other.deg) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

ModMonomial ModMonomial::times(const ModMonomial& t) const {
  ModMonomial r;
  r.exps = exps;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = static_cast<Exponent>(r.exps[i] + t.exps[i]);
  r.comp = comp;
  r.deg = deg + t.deg;
  return r;
}

ModMonomial ModMonomial::quotient(const ModMonomial& divisor) const {
  ModMonomial r;
  r.exps = exps;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = static_cast<Exponent>(r.exps[i] - divisor.exps[i]);
  r.comp = 0;
  r.deg = deg - divisor.deg;
  return r;
}

ModMonomial ModMonomial::lcm(const ModMonomial& other) const {
  ModMonomial r;
  r.exps = exps;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = std::max(r.exps[i], other.exps[i]);
  r.comp = comp;
  r.deg = std::accumulate(r.exps.begin(), r.exps.end(), 0);
  return r;
}

bool ModMonomial::coprime(const ModMonomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0 && other.exps[i] != 0) return false;
  return true;
}

int ModMonomial::degree_in(const VarMask& mask) const {
  int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (mask[i]) d += exps[i];
  return d;
}

std::size_t ModMonomialHash::operator()(const ModMonomial& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.comp) * 0x9e3779b97f4a7c15ULL;
  for (Exponent e : m.exps) h = (h ^ e) * 0x100000001b3ULL + 0x7f4a7c15;
  return h;
}

// ---------------------------------------------------------------- orderings

namespace {

int revlex(const ModMonomial& a, const ModMonomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
  return 0;
}

int partial_degree(const ModMonomial& a, std::size_t lo, std::size_t hi) {
  int d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += a.exps[i];
  return d;
}

}  // namespace

Ordering Ordering::local_degree(ModuleRule rule) { return Ordering(Kind::LocalDeg, rule, 0); }
Ordering Ordering::global_degree(ModuleRule rule) { return Ordering(Kind::GlobalDeg, rule, 0); }
Ordering Ordering::block(std::size_t elim_count, ModuleRule rule) { return Ordering(Kind::Block, rule, elim_count); }

int Ordering::compare(const ModMonomial& a, const ModMonomial& b) const {
  const std::size_t n = a.exps.size();
  int c = 0;
  switch (kind_) {
    case Kind::LocalDeg:
      if (a.deg != b.deg) return a.deg < b.deg ? 1 : -1;
      c = revlex(a, b, 0, n);
      break;
    case Kind::GlobalDeg:
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      c = revlex(a, b, 0, n);
      break;
    case Kind::Block: {
      const std::size_t e = std::min(elim_, n);
      const int da = partial_degree(a, 0, e), db = partial_degree(b, 0, e);
      if (da != db) return da > db ? 1 : -1;
      c = revlex(a, b, 0, e);
      if (c != 0) return c;
      if (a.deg - da != b.deg - db) return a.deg - da > b.deg - db ? 1 : -1;
      c = revlex(a, b, e, n);
      break;
    }
  }
  if (c != 0) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

std::string Ordering::name() const {
  switch (kind_) {
    case Kind::LocalDeg: return "ds";
    case Kind::GlobalDeg: return "dp";
    case Kind::Block: return "dp(" + std::to_string(elim_) + "),dp";
  }
  return "?";
}

// ---------------------------------------------------------------- rings

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(' || ch == ')';
  });
}

RingPtr Ring::make(Field field, std::vector<std::string> var_names, Ordering ordering) {
  std::set<std::string> seen;
  for (const auto& v : var_names) {
    if (!is_valid_identifier(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
  return RingPtr(new Ring(field, std::move(var_names), ordering));
}

std::optional<std::size_t> Ring::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr Ring::with_ordering(Ordering ordering) const { return RingPtr(new Ring(field_, names_, ordering)); }

std::string Ring::describe() const {
  std::string out = field_.to_string() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) out += (i ? "," : "") + names_[i];
  return out + "] ordering " + ordering_.name();
}

bool Ring::same_as(const Ring& o) const {
  return this == &o || (field_ == o.field_ && names_ == o.names_ && ordering_ == o.ordering_);
}

namespace {

void check_same_ring(const Vect& a, const Vect& b) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch("operands live in different rings");
}

void check_same_rank(const Vect& a, const Vect& b) {
  check_same_ring(a, b);
  if (a.rank() != b.rank()) throw RankMismatch("operands have different ranks");
}

}  // namespace

// ---------------------------------------------------------------- vectors

Vect::Vect(RingPtr ring, int rank) : ring_(std::move(ring)), rank_(rank) {
  if (rank_ < 1) throw RankMismatch("rank must be positive");
}

Vect Vect::from_terms(RingPtr ring, int rank, std::vector<Term> terms) {
  const Ordering& ord = ring->ordering();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (t.mono.comp < 0 || t.mono.comp >= rank) throw RankMismatch("component index out of range");
    if (t.mono.nvars() != ring->nvars()) throw RingMismatch("monomial has wrong number of variables");
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return Vect(std::move(ring), rank, std::move(out));
}

Vect Vect::constant(RingPtr ring, const Coef& c) {
  return monomial(ring, 1, c, ModMonomial::one(ring->nvars()));
}

Vect Vect::constant(RingPtr ring, std::int64_t c) {
  const Coef k = ring->field().from_int(c);
  return constant(std::move(ring), k);
}

Vect Vect::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->nvars();
  return monomial(ring, 1, ring->field().one(), ModMonomial::variable(n, index));
}

Vect Vect::monomial(RingPtr ring, int rank, const Coef& c, ModMonomial m) {
  std::vector<Term> t;
  t.push_back(Term{c, std::move(m)});
  return from_terms(std::move(ring), rank, std::move(t));
}

Vect Vect::unit_vector(RingPtr ring, int rank, int comp) {
  const std::size_t n = ring->nvars();
  const Coef one = ring->field().one();
  return monomial(std::move(ring), rank, one, ModMonomial::one(n, comp));
}

Vect Vect::from_components(RingPtr ring, std::span<const Vect> components) {
  std::vector<Term> terms;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].rank() != 1) throw RankMismatch("components must be polynomials");
    if (!components[c].ring()->same_as(*ring)) throw RingMismatch("component lives in a different ring");
    for (const Term& t : components[c].terms()) {
      Term u = t;
      u.mono.comp = static_cast<int>(c);
      terms.push_back(std::move(u));
    }
  }
  return from_terms(std::move(ring), static_cast<int>(components.size()), std::move(terms));
}

int Vect::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.deg);
  return d;
}

int Vect::order() const {
  int d = terms_.empty() ? 0 : terms_.front().mono.deg;
  for (const auto& t : terms_) d = std::min(d, t.mono.deg);
  return d;
}

Vect Vect::component(int c) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.comp == c) {
      out.push_back(t);
      out.back().mono.comp = 0;
    }
  return Vect(ring_, 1, std::move(out));
}

Coef Vect::coefficient(const ModMonomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return ring_->field().zero();
}

Vect Vect::operator+(const Vect& o) const {
  check_same_rank(*this, o);
  const Ordering& ord = ring_->ordering();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    const int c = ord.compare(a->mono, b->mono);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Coef s = a->coef + b->coef;
      if (!s.is_zero()) out.push_back(Term{std::move(s), a->mono});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, o.terms_.end());
  return Vect(ring_, rank_, std::move(out));
}

Vect Vect::operator-(const Vect& o) const { return *this + (-o); }

Vect Vect::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = -t.coef;
  return Vect(ring_, rank_, std::move(out));
}

Vect Vect::scaled(const Coef& c) const {
  if (c.is_zero()) return Vect(ring_, rank_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef *= c;
  return Vect(ring_, rank_, std::move(out));
}

Vect Vect::shifted(const ModMonomial& t) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) out.push_back(Term{term.coef, term.mono.times(t)});
  return Vect(ring_, rank_, std::move(out));
}

Vect Vect::minus_multiple(const Coef& c, const ModMonomial& t, const Vect& g) const {
  check_same_rank(*this, g);
  const Ordering& ord = ring_->ordering();
  const Coef neg = -c;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  ModMonomial bm;
  if (b != g.terms_.end()) bm = b->mono.times(t);
  while (a != terms_.end() && b != g.terms_.end()) {
    const int cmp = ord.compare(a->mono, bm);
    if (cmp > 0) {
      out.push_back(*a++);
      continue;
    }
    if (cmp < 0) {
      out.push_back(Term{b->coef * neg, std::move(bm)});
    } else {
      Coef s = a->coef + b->coef * neg;
      if (!s.is_zero()) out.push_back(Term{std::move(s), a->mono});
      ++a;
    }
    if (++b != g.terms_.end()) bm = b->mono.times(t);
  }
  out.insert(out.end(), a, terms_.end());
  for (; b != g.terms_.end(); ++b) out.push_back(Term{b->coef * neg, b->mono.times(t)});
  return Vect(ring_, rank_, std::move(out));
}

Vect Vect::monic() const {
  if (is_zero() || lead_coef().is_one()) return *this;
  return scaled(lead_coef().inverse());
}

Vect Vect::tail() const {
  if (terms_.empty()) return *this;
  return Vect(ring_, rank_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Vect Vect::in_ring(RingPtr target) const {
  if (target->field() != ring_->field() || target->var_names() != ring_->var_names())
    throw RingMismatch("target ring has different field or variables");
  if (target->ordering() == ring_->ordering()) return Vect(std::move(target), rank_, terms_);
  return from_terms(std::move(target), rank_, terms_);
}

bool Vect::operator==(const Vect& o) const {
  if (!ring_->same_as(*o.ring_) || rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Vect operator*(const Vect& f, const Vect& g) {
  check_same_ring(f, g);
  if (f.rank() != 1) throw RankMismatch("left factor of a product must be a polynomial");
  std::vector<Term> prod;
  prod.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) prod.push_back(Term{a.coef * b.coef, b.mono.times(a.mono)});
  return Vect::from_terms(f.ring(), g.rank(), std::move(prod));
}

Vect truncated_product(const Vect& f, const Vect& g, int k, const VarMask& mask) {
  check_same_ring(f, g);
  if (f.rank() != 1) throw RankMismatch("left factor of a product must be a polynomial");
  std::vector<int> gdeg;
  gdeg.reserve(g.size());
  for (const auto& b : g.terms()) gdeg.push_back(b.mono.degree_in(mask));
  std::vector<Term> prod;
  for (const auto& a : f.terms()) {
    const int da = a.mono.degree_in(mask);
    if (da > k) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (da + gdeg[j] <= k) prod.push_back(Term{a.coef * g.terms()[j].coef, g.terms()[j].mono.times(a.mono)});
  }
  return Vect::from_terms(f.ring(), g.rank(), std::move(prod));
}

VarMask all_variables(const Ring& ring) { return VarMask(ring.nvars(), 1); }

// ---------------------------------------------------------------- calculus

Vect partial_derivative_vect(const Vect& f, std::size_t var) {
  if (var >= f.ring()->nvars()) throw std::out_of_range("variable index out of range");
  const Field& k = f.ring()->field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const Exponent e = t.mono.exps[var];
    if (e == 0) continue;
    Coef c = t.coef * k.from_int(e);
    if (c.is_zero()) continue;
    ModMonomial m = t.mono;
    m.exps[var] = static_cast<Exponent>(e - 1);
    m.deg -= 1;
    out.push_back(Term{std::move(c), std::move(m)});
  }
  return Vect::from_terms(f.ring(), f.rank(), std::move(out));
}

Poly partial_derivative(const Poly& f, std::size_t var) {
  if (f.rank() != 1) throw RankMismatch("partial_derivative expects a polynomial");
  return partial_derivative_vect(f, var);
}

Vect jet(const Vect& f, int k) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (t.mono.deg <= k) out.push_back(t);
  return Vect::from_terms(f.ring(), f.rank(), std::move(out));
}

Vect jet(const Vect& f, int k, const VarMask& mask) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (t.mono.degree_in(mask) <= k) out.push_back(t);
  return Vect::from_terms(f.ring(), f.rank(), std::move(out));
}

Poly substitute(const Poly& f, std::span<const Poly> images, int k, const VarMask& mask) {
  if (f.rank() != 1) throw RankMismatch("substitute expects a polynomial");
  if (images.size() != f.ring()->nvars()) throw RingMismatch("need one image per variable");
  if (images.empty()) throw RingMismatch("substitution needs a target ring");
  const RingPtr& target = images.front().ring();
  for (const auto& img : images)
    if (!img.ring()->same_as(*target) || img.rank() != 1) throw RingMismatch("images must share one ring");
  if (mask.size() != target->nvars()) throw RingMismatch("truncation mask has wrong length");

  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, Exponent e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Vect::constant(target, 1));
    while (cache.size() <= e) cache.push_back(truncated_product(cache.back(), images[i], k, mask));
    return cache[e];
  };

  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    Poly prod = Vect::constant(target, t.coef);
    for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i)
      if (t.mono.exps[i] != 0) prod = truncated_product(prod, power(i, t.mono.exps[i]), k, mask);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Vect::from_terms(target, 1, std::move(acc));
}

Coef evaluate(const Poly& f, std::span<const Coef> point) {
  if (point.size() != f.ring()->nvars()) throw RingMismatch("point has wrong number of coordinates");
  Coef acc = f.ring()->field().zero();
  for (const auto& t : f.terms()) {
    Coef v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono.exps[i] != 0) v *= point[i].pow(t.mono.exps[i]);
    acc += v;
  }
  return acc;
}

Vect map_variables(const Vect& f, const RingPtr& target, std::span<const std::size_t> var_map) {
  if (var_map.size() != f.ring()->nvars()) throw RingMismatch("variable map has wrong length");
  if (target->field() != f.ring()->field()) throw RingMismatch("target ring has a different field");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Exponents e(target->nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i)
      if (t.mono.exps[i] != 0) e.at(var_map[i]) = static_cast<Exponent>(e.at(var_map[i]) + t.mono.exps[i]);
    out.push_back(Term{t.coef, ModMonomial(std::move(e), t.mono.comp)});
  }
  return Vect::from_terms(target, f.rank(), std::move(out));
}

std::vector<CoefficientEntry> collect_coefficients(const Poly& f, std::span<const std::size_t> x_vars,
                                                   const RingPtr& param_ring) {
  const std::size_t n = f.ring()->nvars();
  std::vector<bool> is_x(n, false);
  for (std::size_t i : x_vars) is_x.at(i) = true;
  std::vector<std::size_t> param_vars;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_x[i]) param_vars.push_back(i);
  if (param_vars.size() != param_ring->nvars()) throw RingMismatch("parameter ring has wrong number of variables");

  std::unordered_map<ModMonomial, std::vector<Term>, ModMonomialHash> groups;
  for (const auto& t : f.terms()) {
    Exponents xe, pe;
    for (std::size_t i : x_vars) xe.push_back(t.mono.exps[i]);
    for (std::size_t i : param_vars) pe.push_back(t.mono.exps[i]);
    groups[ModMonomial(std::move(xe))].push_back(Term{t.coef, ModMonomial(std::move(pe))});
  }
  std::vector<CoefficientEntry> out;
  for (auto& [xm, terms] : groups)
    out.push_back(CoefficientEntry{xm, Vect::from_terms(param_ring, 1, std::move(terms))});
  const Ordering local = Ordering::local_degree();
  std::sort(out.begin(), out.end(),
            [&](const CoefficientEntry& a, const CoefficientEntry& b) { return local.greater(a.x_monomial, b.x_monomial); });
  return out;
}

std::vector<ModMonomial> monomials_up_to(std::size_t nvars, int k) {
  std::vector<ModMonomial> out;
  Exponents e(nvars, 0);
  // odometer over all exponent vectors of total degree <= k
  auto rec = [&](auto&& self, std::size_t i, int budget) -> void {
    if (i == nvars) {
      out.emplace_back(e);
      return;
    }
    for (int d = 0; d <= budget; ++d) {
      e[i] = static_cast<Exponent>(d);
      self(self, i + 1, budget - d);
    }
    e[i] = 0;
  };
  if (k >= 0) rec(rec, 0, k);
  const Ordering local = Ordering::local_degree();
  std::sort(out.begin(), out.end(), [&](const ModMonomial& a, const ModMonomial& b) { return local.greater(a, b); });
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t jet_space_dim(std::int64_t m, std::int64_t n, std::int64_t s, std::int64_t k) {
  return m * n * binomial(s + k, k);
}

// ---------------------------------------------------------------- rendering

std::string render_monomial(const Ring& ring, const ModMonomial& m, bool with_component) {
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_name(i);
    if (m.exps[i] > 1) out += '^' + std::to_string(m.exps[i]);
  }
  if (with_component) {
    if (!out.empty()) out += '*';
    out += "gen(" + std::to_string(m.comp + 1) + ")";
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string render_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    std::string c = t.coef.to_string();
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (t.mono.is_constant()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += render_monomial(*f.ring(), t.mono, false);
    }
  }
  return out;
}

}  // namespace

std::string render(const Vect& f) {
  if (f.rank() == 1) return render_poly(f);
  std::string out = "[";
  for (int c = 0; c < f.rank(); ++c) out += (c ? ", " : "") + render_poly(f.component(c));
  return out + "]";
}

// ---------------------------------------------------------------- matrices

MatrixSeries::MatrixSeries(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count does not match dimensions");
  for (const auto& e : entries_)
    if (!e.ring()->same_as(*ring_) || e.rank() != 1) throw RingMismatch("matrix entries must be polynomials of one ring");
}

bool MatrixSeries::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<int> MatrixSeries::order() const {
  std::optional<int> o;
  for (const auto& e : entries_)
    if (!e.is_zero()) o = o ? std::min(*o, e.order()) : e.order();
  return o;
}

bool MatrixSeries::in_maximal_ideal() const {
  const ModMonomial one = ModMonomial::one(ring_->nvars());
  return std::all_of(entries_.begin(), entries_.end(), [&](const Poly& p) { return p.coefficient(one).is_zero(); });
}

Vect MatrixSeries::flatten() const { return Vect::from_components(ring_, entries_); }

MatrixSeries MatrixSeries::unflatten(const Vect& v, std::size_t rows, std::size_t cols) {
  if (static_cast<std::size_t>(v.rank()) != rows * cols) throw RankMismatch("vector rank does not match matrix shape");
  std::vector<Poly> entries;
  for (int c = 0; c < v.rank(); ++c) entries.push_back(v.component(c));
  return MatrixSeries(v.ring(), rows, cols, std::move(entries));
}

MatrixSeries MatrixSeries::in_ring(RingPtr target) const {
  std::vector<Poly> entries;
  for (const auto& e : entries_) entries.push_back(e.in_ring(target));
  return MatrixSeries(std::move(target), rows_, cols_, std::move(entries));
}

MatrixSeries MatrixSeries::jet(int k) const {
  std::vector<Poly> entries;
  for (const auto& e : entries_) entries.push_back(dkit::jet(e, k));
  return MatrixSeries(ring_, rows_, cols_, std::move(entries));
}

}  // namespace dkit
