#pragma once

#include "dkit/determinacy.hpp"
#include "dkit/ring.hpp"
#include "dkit/sbasis.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dkit {

class InfiniteCodimension : public std::runtime_error {
public:
  InfiniteCodimension() : std::runtime_error("tangent image has infinite codimension") {}
};

class ParameterCapExceeded : public std::runtime_error {
public:
  ParameterCapExceeded(std::size_t count, std::size_t cap)
      : std::runtime_error("jet group needs " + std::to_string(count) + " parameters, above the cap of " +
                           std::to_string(cap)) {}
};

/// dim G^(k): s*C(s+k,k) - s for R, plus m^2*C(s+k,k) for a left block and
/// n^2*C(s+k,k) for a right block.
std::int64_t group_dimension(GroupKind group, std::int64_t m, std::int64_t n, std::int64_t s, std::int64_t k);

/// Symbolic generic element of the k-jet group.
///
/// Parameters, in ring order:
///   U_i_j_a  left matrix, 1 <= i,j <= m, a indexes the x-monomials of degree
///            <= k in local-degree order (a = 0 is the constant term)
///   V_i_j_a  right matrix, same scheme with n
///   G_i_j    linear part of the coordinate change
///   H_i_a    higher part, a ranging over monomials of degree 2..k
/// The generic element is
///   coordinate i:  sum_j (delta_ij + G_i_j) x_j + sum_a H_i_a x^a
///   U entry ij:    delta_ij + sum_a U_i_j_a x^a, likewise V,
/// so the parameter origin is the identity.
struct JetGroupPresentation {
  int k = 0;
  GroupKind group = GroupKind::RightR;
  std::size_t m = 1, n = 1, s = 1;
  /// x variables first, then the parameters; degree ordering.
  RingPtr joint_ring;
  std::vector<std::string> param_names;
  std::vector<Poly> coordinate_images;  // s entries
  std::vector<Poly> left;               // m*m row-major, empty without a left block
  std::vector<Poly> right;              // n*n row-major, empty without a right block

  std::size_t param_count() const { return param_names.size(); }
  /// Indices of the x variables in joint_ring.
  std::vector<std::size_t> x_indices() const;
  /// Parameters only, under the given ordering.
  RingPtr param_ring(Ordering ordering) const;
};

struct GenericElement {
  JetGroupPresentation presentation;
  /// jet_k(U * A(coordinates) * V), the jet taken in x only.
  MatrixSeries b;
};

/// A must lie in m*M; it is truncated to degree k first.
GenericElement generic_element(int k, GroupKind group, const MatrixSeries& a);

/// The x-monomials of degree <= k in local-degree order crossed with the
/// matrix positions, positions outermost (row-major). The i-th entry is the
/// i-th orbit coordinate u<i+1>.
struct CoordinateSlot {
  std::size_t row, col;
  ModMonomial x_monomial;
};
std::vector<CoordinateSlot> coordinate_slots(std::size_t m, std::size_t n, std::size_t s, int k);

/// Coordinates of jet_k(A) in the slot enumeration.
std::vector<Coef> jet_coordinates(const MatrixSeries& a, int k);

struct OrbitEquations {
  GenericElement element;
  /// c_1..c_t in the parameter ring (global ordering).
  std::vector<Poly> coordinates;
  /// u1..ut, global degree ordering.
  RingPtr u_ring;
  /// Generators of the ideal of the orbit closure.
  std::vector<Poly> equations;
};

/// Closure of the orbit of jet_k(A): eliminate the parameters from
/// <u_i - c_i>.
OrbitEquations orbit_equations(int k, const MatrixSeries& a, GroupKind group);

struct StabilizerEquations {
  GenericElement element;
  /// Coefficients of B - jet_k(A), one per coordinate slot (zeros kept).
  std::vector<Poly> equations;
};

/// Equations of the stabilizer of jet_k(A) inside the parameter space; the
/// parameter ring uses the given ordering.
StabilizerEquations stabilizer_equations(int k, const MatrixSeries& a, GroupKind group,
                                         Ordering ordering = Ordering::local_degree());

enum class OrbitMethod { Eliminate, Stabilizer };
std::string_view method_name(OrbitMethod m);

struct OrbitOptions {
  /// Jet level; defaults to the pre-determinacy bound and may not be below it.
  std::optional<int> jet_level;
  std::size_t param_cap = 64;
  OrbitMethod method = OrbitMethod::Stabilizer;
  /// Dimension of the stabilizer computed at the identity germ (local
  /// ordering) or globally.
  bool stabilizer_local = true;
};

struct OrbitReport {
  OrbitMethod method = OrbitMethod::Stabilizer;
  int pre_bound = 0;
  int k_used = 0;
  std::int64_t t = 0;
  std::int64_t dim_group = 0;
  std::int64_t dim_orbit = 0;
  std::int64_t dim_stab = 0;
  std::int64_t c_tangent_space = 0;
  std::int64_t c_tangent_image = 0;
  bool separable = false;
  /// Orbit equations (eliminate) or stabilizer equations (stabilizer).
  std::vector<Poly> equations;
  RingPtr equation_ring;
};

OrbitReport codim_tangent_space_via_orbit(const MatrixSeries& a, GroupKind group, const OrbitOptions& opts = {});
OrbitReport codim_tangent_space_via_stab(const MatrixSeries& a, GroupKind group, const OrbitOptions& opts = {});
/// Runs the method chosen in opts; separable iff the two codimensions agree.
OrbitReport separability_verdict(const MatrixSeries& a, GroupKind group, const OrbitOptions& opts = {});

}  // namespace dkit
