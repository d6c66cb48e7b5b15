#pragma once

#include "dkit/ring.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace dkit {

class InfiniteDimension : public std::runtime_error {
public:
  InfiniteDimension() : std::runtime_error("quotient has infinite K-dimension") {}
};

class OrderingMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class RankError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct NormalForm {
  Vect nf;
  /// The implicit multiplier u with u*f = nf + (combination of the basis) has
  /// a nonzero constant term, i.e. it is a unit of the local ring.
  bool unit_ok = true;
};

/// Weak normal form of f with respect to basis.
///
/// Under a local ordering this is Mora's algorithm: reducers are chosen with
/// minimal ecart among the basis and earlier intermediate results, and an
/// intermediate result joins the reducer set whenever the chosen reducer has
/// larger ecart. Under a global ordering only leading terms are reduced.
/// The result is zero iff a unit multiple of f lies in the submodule.
/// With a degree cap under a local ordering, terms of degree above the cap
/// are dropped along the way; this is sound when m^(cap+1) * M lies in the
/// submodule.
NormalForm mora_nf(const Vect& f, std::span<const Vect> basis, std::optional<int> degree_cap = std::nullopt);

/// Full reduction (leading and tail terms) under a global ordering.
Vect reduce_full(const Vect& f, std::span<const Vect> basis);

/// S-vector of two elements whose leading terms share a component; zero
/// otherwise.
Vect s_vector(const Vect& f, const Vect& g);

/// A minimal standard basis: leading monomials are pairwise non-divisible.
/// Under global orderings the basis is also tail-reduced and monic.
class StdBasis {
public:
  StdBasis(RingPtr ring, int rank, std::vector<Vect> gens)
      : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {}

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const Ordering& ordering() const { return ring_->ordering(); }
  const std::vector<Vect>& gens() const { return gens_; }
  std::vector<ModMonomial> lead_monomials() const;

private:
  RingPtr ring_;
  int rank_;
  std::vector<Vect> gens_;
};

/// Standard basis of the submodule of K[x]^rank generated by gens (zeros are
/// ignored). Under a local ordering the result generates the same submodule
/// over the localization and over the power series ring.
StdBasis standard_basis(const RingPtr& ring, int rank, std::span<const Vect> gens);

/// Smallest D with every monomial vector of degree D in the leading module;
/// for a local degree ordering this means m^D * M lies in the submodule.
/// nullopt when the staircase is infinite.
std::optional<int> power_bound(const StdBasis& basis);

/// Number of monomials outside the leading module; nullopt when infinite.
std::optional<std::int64_t> vdim(const StdBasis& basis);

/// Monomials outside the leading module, largest first. With a degree cap
/// only monomials of total degree <= cap are listed (a basis of the quotient
/// by the submodule plus m^(cap+1)). Throws InfiniteDimension when uncapped
/// and vdim is infinite.
std::vector<ModMonomial> kbase(const StdBasis& basis, std::optional<int> degree_cap = std::nullopt);

/// Krull dimension of K[x]/L for the leading ideal L: the number of variables
/// minus a minimum transversal of the leading-monomial supports. -1 for the
/// unit ideal. Rank-1 only.
int krull_dim(const StdBasis& basis);

/// Generators of <gens> intersected with the polynomials free of elim_vars,
/// returned in the ring of gens. Computed as the block-ordering Groebner
/// basis elements whose leading monomial avoids elim_vars.
std::vector<Poly> eliminate(std::span<const Poly> gens, std::span<const std::size_t> elim_vars);

}  // namespace dkit
