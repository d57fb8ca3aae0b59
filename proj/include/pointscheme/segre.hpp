#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointscheme/bimodule.hpp"
#include "pointscheme/point_scheme.hpp"

namespace pointscheme {

/// A normalized nonzero functional on the path component of E^⊗n,
/// coordinates in tensor_component_basis order.
struct BigFunctional {
  std::size_t degree = 0;
  Path path;
  Vector coords;

  friend bool operator==(const BigFunctional&, const BigFunctional&) = default;
  friend auto operator<=>(const BigFunctional&, const BigFunctional&) = default;
};

/// Tensor-product functional w ↦ ∏ φ_i(w_i).
BigFunctional segre(const Bimodule& e, const PointTuple& t);

/// Two-step Segre on already-embedded factors: coordinates on the word u·v
/// are left[u]·right[v].  The associator is the identity on word indices.
BigFunctional segre_pair(const BigFunctional& left, const BigFunctional& right);

/// The unique tuple with segre(t) = b, or nullopt when b is not a rank-one
/// product functional.
std::optional<PointTuple> segre_preimage(const Bimodule& e, const BigFunctional& b);

/// segre(t) annihilates the path component of I_n.
bool pullback_membership(const AlgebraSpec& a, const PointTuple& t);

/// Quotient of E by a degree-1 subbimodule, with the bookkeeping needed to
/// push functionals and words down to it.
struct BimoduleQuotient {
  Bimodule quotient;
  /// For every arrow of E: its arrow id in the quotient when the arrow is a
  /// non-pivot basis element of its component, else nullopt.
  std::vector<std::optional<std::size_t>> kept;
  /// Reduced basis of the subspace per component (x, y).
  std::map<std::pair<VertexId, VertexId>, Matrix> sub;
};

/// `sub` lists degree-1 elements; each component of the quotient keeps the
/// non-pivot basis elements of the reduced span as its basis.
BimoduleQuotient quotient_bimodule(const Bimodule& e, Field f, const std::vector<TensorElem>& sub);

/// Segre over E/⟨sub⟩ of the descended tuple equals the descent of segre(t).
/// Throws when some φ_i does not vanish on sub.
bool check_functoriality(const AlgebraSpec& a, const std::vector<TensorElem>& sub, const PointTuple& t);

/// segre_pair(segre(first a), segre(last n-a)) == segre(t), for 1 <= a < n.
bool check_associativity(const Bimodule& e, const PointTuple& t, std::size_t split);

/// All five bracketings of a length-4 tuple give the same functional.
bool check_pentagon(const Bimodule& e, const PointTuple& t);

/// ker(⊗φ_i) equals Σ_l E^⊗l ⊗ ker φ_l ⊗ E^⊗(n-l-1) on the path component.
/// Throws unless t is a point of Γ_n.
bool kernel_decomposition_check(const AlgebraSpec& a, const PointTuple& t);

/// Every 2x2 minor along each single tensor position vanishes.
bool rank_one_minors_vanish(const Bimodule& e, const BigFunctional& b);

/// `path<TAB>deg<TAB>c:c:...`
std::string write_big_functional(const Bimodule& e, const BigFunctional& b);

}  // namespace pointscheme
