#pragma once

#include "dkit/determinacy.hpp"
#include "dkit/ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace dkit::testing {

/// Row space over a field, kept in echelon form.
class RowSpace {
public:
  explicit RowSpace(std::size_t width) : width_(width) {}
  /// True if the rank went up.
  bool insert(std::vector<Coef> row);
  bool contains(std::vector<Coef> row) const;
  std::size_t rank() const { return rows_.size(); }

private:
  void reduce(std::vector<Coef>& row) const;
  std::size_t width_;
  std::vector<std::pair<std::size_t, std::vector<Coef>>> rows_;  // pivot, row with pivot 1
};

/// Dense coordinates for M / m^(D+1) M: every (monomial of degree <= D, component).
class JetCoordinates {
public:
  JetCoordinates(std::size_t nvars, int rank, int degree);
  std::size_t width() const { return index_.size(); }
  /// Index of x^e * e_c, or nothing when deg e > D.
  std::optional<std::size_t> index(const std::vector<int>& exps, int comp) const;
  const std::vector<std::pair<std::vector<int>, int>>& cells() const { return cells_; }
  int degree() const { return degree_; }

private:
  int degree_;
  std::map<std::pair<std::vector<int>, int>, std::size_t> index_;
  std::vector<std::pair<std::vector<int>, int>> cells_;
};

/// A vector given componentwise as sparse (exponents -> coefficient) maps.
using SparseVector = std::vector<std::map<std::vector<int>, Coef>>;

SparseVector to_sparse(const Vect& v);
SparseVector to_sparse(const MatrixSeries& a);

/// Tangent image generators rebuilt from the matrix entries by hand.
std::vector<SparseVector> oracle_generators(const MatrixSeries& a, GroupKind group);

/// span{ jet_D(x^a g) } in the coordinates of degree D.
RowSpace jet_span(const std::vector<SparseVector>& gens, const Field& field, std::size_t nvars, int rank, int degree);

struct JetOracle {
  int p;
  std::int64_t codim;
};

/// p is one less than the first D with every degree-D monomial vector in
/// T + m^(D+1) M; codim = dim M / m^(p+1) M - rank of the jet_p span.
/// nothing if no D <= max_degree works.
std::optional<JetOracle> jet_oracle(const MatrixSeries& a, GroupKind group, int max_degree = 10);

/// Whether jet_p(f) lies in the jet_p span of the tangent image.
bool jet_oracle_contains(const MatrixSeries& a, GroupKind group, int p, const Vect& f);

/// Largest set S of variables such that no monomial has its support inside S;
/// -1 if some monomial is constant. Exhaustive over subsets.
int krull_oracle(const std::vector<ModMonomial>& monomials, std::size_t nvars);

/// Random matrix in m*M: each entry has 1..3 terms of degree 1..max_degree.
MatrixSeries random_matrix(std::mt19937_64& rng, const RingPtr& ring, std::size_t rows, std::size_t cols,
                           int max_degree);

/// Random polynomial combination of the given vectors plus nothing else.
Vect random_combination(std::mt19937_64& rng, std::span<const Vect> gens, int max_degree);

Coef random_coef(std::mt19937_64& rng, const Field& field, bool nonzero);

}  // namespace dkit::testing
