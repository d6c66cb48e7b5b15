#pragma once

#include "dkit/ring.hpp"
#include "dkit/sbasis.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dkit {

/// The groups acting on m x n matrices of power series: coordinate changes
/// alone (RightR), combined with invertible matrices on the left (Gl), on the
/// right (Gr) or on both sides (Glr). Contact equivalence of a single series
/// is Gl with m = n = 1.
enum class GroupKind { RightR, Gl, Gr, Glr };

std::string group_name(GroupKind g);

class NotInMaximalIdeal : public std::invalid_argument {
public:
  NotInMaximalIdeal() : std::invalid_argument("matrix entries must have zero constant term") {}
};

/// Generators of the tangent image before completion, as rank m*n vectors
/// in the local-ordering version of A's ring: E_pq*A (left block), A*E_hl
/// (right block) and x_mu * dA/dx_nu, zero vectors dropped.
std::vector<Vect> tangent_image_generators(const MatrixSeries& a, GroupKind group);

struct TangentImage {
  StdBasis basis;
  GroupKind group;
  MatrixSeries source;
};

/// Standard basis of the tangent image under the local degree ordering with
/// term-over-component module rule.
TangentImage tangent_image(const MatrixSeries& a, GroupKind group);

struct QuotientBasis {
  std::vector<ModMonomial> kbasis;
  std::int64_t codim = 0;
};

/// Monomial K-basis of M/T and its size; nullopt when the codimension is
/// infinite.
std::optional<QuotientBasis> basis_codim(const TangentImage& t);

/// Smallest p >= 0 with m^(p+1) M contained in the tangent image, found by
/// raising p until every monomial vector of degree p+1 has normal form 0.
/// nullopt when the codimension is infinite.
std::optional<int> predeterminacy(const TangentImage& t);
std::optional<int> predeterminacy(const MatrixSeries& a, GroupKind group);

struct DetermResult {
  std::optional<std::int64_t> codim;
  std::optional<int> pre_bound;
  /// 2p - ord(A) + 2.
  std::optional<int> determ_bound;
  /// ord(A); empty only for the zero matrix.
  std::optional<int> order;
};

DetermResult determinacy_bound(const MatrixSeries& a, GroupKind group);
DetermResult determinacy_bound(const TangentImage& t);

enum class Verdict { FinitelyDetermined, NotFinitelyDetermined, Undecided };

/// Finite codimension certifies finite determinacy. Infinite codimension
/// disproves it only for column matrices under Gl or Glr; otherwise the
/// answer is undecided.
Verdict determinacy_verdict(const DetermResult& r, std::size_t cols, GroupKind group);
std::string_view verdict_name(Verdict v);

}  // namespace dkit
