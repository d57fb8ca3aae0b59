#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointscheme/bimodule.hpp"
#include "pointscheme/point_scheme.hpp"

namespace pointscheme {

/// An explicit truncated right module M_0 ⊕ ... ⊕ M_n with every M_i
/// one-dimensional on a fixed basis vector m_i.
///
/// `mult[i][e]` is the scalar of μ_{i,1}(m_i ⊗ e) = c·m_{i+1} for basis
/// element e of E_{x_i x_{i+1}}.  `extended[i][j-1][w]` is the scalar of
/// μ_{i,j}(m_i ⊗ w) for each basis word w of the segment x_i..x_{i+j}, in
/// tensor_component_basis order.  The algebra is held by pointer and must
/// outlive the realization.
struct ModuleRealization {
  const AlgebraSpec* algebra = nullptr;
  Path path;
  std::vector<Vector> mult;
  std::vector<std::vector<Vector>> extended;

  std::size_t length() const { return mult.size(); }
};

struct RealizeFailure {
  std::size_t generator;
  std::string generator_name;
  std::size_t window;
};

struct RealizeOutcome {
  ModuleRealization module;
  std::optional<RealizeFailure> failure;

  bool ok() const { return !failure.has_value(); }
};

/// Builds μ from raw structure constants (any nonzero scalings allowed) and
/// checks that every generator window acts by zero.
RealizeOutcome realize(const AlgebraSpec& a, const Path& path, std::vector<Vector> structure);
RealizeOutcome realize(const AlgebraSpec& a, const PointTuple& t);

struct ExtensionCheck {
  bool ok = true;
  std::string witness;
};

/// Recomputes every μ_{i,j} by right-to-left bracketing, checks every split
/// μ_{i,j+k} = μ_{i+j,k} ∘ (μ_{i,j} ⊗ 1) and the unit action of the
/// degree-0 idempotents against the stored tables.
ExtensionCheck verify_extension(const ModuleRealization& r);

/// Same path and projectively equal structure constants.
bool isomorphic(const ModuleRealization& r1, const ModuleRealization& r2);

/// Plain-text listing of every μ scalar.
std::string dump(const ModuleRealization& r);

}  // namespace pointscheme
