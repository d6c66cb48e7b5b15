#pragma once

#include "dkit/field.hpp"

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dkit {

class RingMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class RankMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Exponent = std::uint16_t;
using Exponents = boost::container::small_vector<Exponent, 24>;
/// One flag per ring variable; nonzero marks the variables that count toward a degree.
using VarMask = std::vector<std::uint8_t>;

/// Exponent vector together with a free-module component. Ring elements use
/// component 0.
struct ModMonomial {
  Exponents exps;
  int comp = 0;
  int deg = 0;

  ModMonomial() = default;
  ModMonomial(Exponents e, int component = 0);

  static ModMonomial one(std::size_t nvars, int component = 0);
  static ModMonomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const { return exps.size(); }
  bool is_constant() const { return deg == 0; }

  /// Same component and componentwise <=.
  bool divides(const ModMonomial& other) const;
  /// The product of a ring monomial with this one keeps this component.
  ModMonomial times(const ModMonomial& ring_monomial) const;
  /// Ring monomial t with t * divisor == *this; requires divisor.divides(*this).
  ModMonomial quotient(const ModMonomial& divisor) const;
  /// Least common multiple of two monomials with equal components.
  ModMonomial lcm(const ModMonomial& other) const;
  bool coprime(const ModMonomial& other) const;
  /// Total degree in the variables flagged by mask.
  int degree_in(const VarMask& mask) const;

  bool operator==(const ModMonomial& o) const { return comp == o.comp && exps == o.exps; }
  bool operator!=(const ModMonomial& o) const { return !(*this == o); }
};

struct ModMonomialHash {
  std::size_t operator()(const ModMonomial& m) const noexcept;
};

/// Monomial orderings. Within a degree, ties are broken reverse
/// lexicographically: scanning from the last variable, the monomial with the
/// smaller exponent at the first difference is larger.
class Ordering {
public:
  enum class Kind { LocalDeg, GlobalDeg, Block };
  enum class ModuleRule { None, TermOverComponent };

  static Ordering local_degree(ModuleRule rule = ModuleRule::TermOverComponent);
  static Ordering global_degree(ModuleRule rule = ModuleRule::TermOverComponent);
  /// The first elim_count variables dominate (degree-reverse-lexicographic on
  /// that block), ties fall through to the same ordering on the rest.
  static Ordering block(std::size_t elim_count, ModuleRule rule = ModuleRule::TermOverComponent);

  Kind kind() const { return kind_; }
  ModuleRule module_rule() const { return rule_; }
  std::size_t elim_count() const { return elim_; }
  bool is_local() const { return kind_ == Kind::LocalDeg; }

  /// Positive if a > b, negative if a < b, zero if equal. Lower components
  /// are larger when monomial parts agree.
  int compare(const ModMonomial& a, const ModMonomial& b) const;
  bool greater(const ModMonomial& a, const ModMonomial& b) const { return compare(a, b) > 0; }

  /// Short name for reports: "ds", "dp" or "dp(e),dp".
  std::string name() const;

  bool operator==(const Ordering& o) const { return kind_ == o.kind_ && rule_ == o.rule_ && elim_ == o.elim_; }
  bool operator!=(const Ordering& o) const { return !(*this == o); }

private:
  Ordering(Kind k, ModuleRule r, std::size_t e) : kind_(k), rule_(r), elim_(e) {}
  Kind kind_;
  ModuleRule rule_;
  std::size_t elim_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring K[x_1..x_s] with a fixed monomial ordering. Immutable.
class Ring {
public:
  static RingPtr make(Field field, std::vector<std::string> var_names, Ordering ordering);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::string& var_name(std::size_t i) const { return names_.at(i); }
  const Ordering& ordering() const { return ordering_; }
  std::optional<std::size_t> var_index(std::string_view name) const;

  /// Same field and variables under another ordering.
  RingPtr with_ordering(Ordering ordering) const;

  /// e.g. "GF(2)[x,y] ordering ds".
  std::string describe() const;

  bool same_as(const Ring& o) const;

private:
  Ring(Field f, std::vector<std::string> names, Ordering o)
      : field_(f), names_(std::move(names)), ordering_(o) {}
  Field field_;
  std::vector<std::string> names_;
  Ordering ordering_;
};

bool is_valid_identifier(std::string_view name);

struct Term {
  Coef coef;
  ModMonomial mono;
};

/// Element of the free module K[x]^rank, stored as terms in strictly
/// decreasing order under the ring ordering. Rank-1 vectors are polynomials.
class Vect {
public:
  explicit Vect(RingPtr ring, int rank = 1);

  /// Sorts, merges duplicates and drops zero coefficients.
  static Vect from_terms(RingPtr ring, int rank, std::vector<Term> terms);
  static Vect constant(RingPtr ring, const Coef& c);
  static Vect constant(RingPtr ring, std::int64_t c);
  static Vect variable(RingPtr ring, std::size_t index);
  static Vect monomial(RingPtr ring, int rank, const Coef& c, ModMonomial m);
  /// e_comp in K[x]^rank.
  static Vect unit_vector(RingPtr ring, int rank, int comp);
  /// Vector whose components are the given polynomials.
  static Vect from_components(RingPtr ring, std::span<const Vect> components);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& lead_term() const { return terms_.front(); }
  const ModMonomial& lead() const { return terms_.front().mono; }
  const Coef& lead_coef() const { return terms_.front().coef; }

  /// Largest total degree of a term.
  int degree() const;
  /// Smallest total degree of a term (the order of a power series).
  int order() const;
  /// degree() - deg(lead()).
  int ecart() const { return degree() - lead().deg; }

  Vect component(int c) const;
  /// Coefficient of the given monomial (zero if absent).
  Coef coefficient(const ModMonomial& m) const;

  Vect operator+(const Vect& o) const;
  Vect operator-(const Vect& o) const;
  Vect operator-() const;
  Vect scaled(const Coef& c) const;
  /// Multiply by a ring monomial.
  Vect shifted(const ModMonomial& ring_monomial) const;
  /// this - c * t * g, in one merge pass.
  Vect minus_multiple(const Coef& c, const ModMonomial& t, const Vect& g) const;
  /// Same polynomial with leading coefficient 1.
  Vect monic() const;
  /// All terms but the leading one.
  Vect tail() const;

  /// Re-express in another ring with identical variables (ordering may differ).
  Vect in_ring(RingPtr target) const;

  bool operator==(const Vect& o) const;
  bool operator!=(const Vect& o) const { return !(*this == o); }

private:
  Vect(RingPtr ring, int rank, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), rank_(rank), terms_(std::move(sorted_terms)) {}
  friend Vect operator*(const Vect& f, const Vect& g);
  friend Vect truncated_product(const Vect& f, const Vect& g, int k, const VarMask& mask);

  RingPtr ring_;
  int rank_ = 1;
  std::vector<Term> terms_;
};

using Poly = Vect;

/// Polynomial (rank 1) times a vector of any rank.
Vect operator*(const Vect& f, const Vect& g);
/// f * g with every term of mask-degree above k dropped.
Vect truncated_product(const Vect& f, const Vect& g, int k, const VarMask& mask);

/// All-true mask over the ring variables.
VarMask all_variables(const Ring& ring);

Poly partial_derivative(const Poly& f, std::size_t var);
/// Componentwise derivative of a vector.
Vect partial_derivative_vect(const Vect& f, std::size_t var);

/// Drop every term whose degree in the masked variables exceeds k.
Vect jet(const Vect& f, int k);
Vect jet(const Vect& f, int k, const VarMask& mask);

/// f(images) truncated to mask-degree k after every product. images live in
/// a common target ring; one image per variable of f's ring.
Poly substitute(const Poly& f, std::span<const Poly> images, int k, const VarMask& mask);

/// Value of f at a point, one coefficient per ring variable.
Coef evaluate(const Poly& f, std::span<const Coef> point);

/// Move f into target by sending variable i to variable var_map[i].
Vect map_variables(const Vect& f, const RingPtr& target, std::span<const std::size_t> var_map);

struct CoefficientEntry {
  ModMonomial x_monomial;  // over the x variables only
  Poly coefficient;        // in the parameter ring
};

/// Split F over (x, params) into x-monomials and parameter coefficients.
/// x_vars are the indices of the x variables in F's ring; every other
/// variable goes to param_ring in order. Entries follow the local-degree
/// ordering on x-monomials.
std::vector<CoefficientEntry> collect_coefficients(const Poly& f, std::span<const std::size_t> x_vars,
                                                   const RingPtr& param_ring);

/// All monomials in nvars variables of degree <= k, in descending
/// local-degree order (1 first).
std::vector<ModMonomial> monomials_up_to(std::size_t nvars, int k);

std::int64_t binomial(std::int64_t n, std::int64_t k);
/// m * n * C(s + k, k).
std::int64_t jet_space_dim(std::int64_t m, std::int64_t n, std::int64_t s, std::int64_t k);

/// Canonical text in the polynomial grammar. Vectors render as "[f1, f2]".
std::string render(const Vect& f);
std::string render_monomial(const Ring& ring, const ModMonomial& m, bool with_component);

/// m x n matrix of polynomials, flattened row-major into rank m*n vectors.
class MatrixSeries {
public:
  MatrixSeries(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  const std::vector<Poly>& entries() const { return entries_; }

  bool is_zero() const;
  /// Minimum order of the nonzero entries; empty for the zero matrix.
  std::optional<int> order() const;
  /// Every entry has zero constant term.
  bool in_maximal_ideal() const;

  Vect flatten() const;
  static MatrixSeries unflatten(const Vect& v, std::size_t rows, std::size_t cols);
  MatrixSeries in_ring(RingPtr target) const;
  MatrixSeries jet(int k) const;

private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> entries_;
};

}  // namespace dkit
