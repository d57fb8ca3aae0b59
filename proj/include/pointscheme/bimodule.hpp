#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pointscheme/field.hpp"
#include "pointscheme/linalg.hpp"

namespace pointscheme {

using VertexId = std::size_t;

/// The finite discrete base: an ordered list of distinct vertex labels.
class BaseSet {
 public:
  explicit BaseSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find(const std::string& label) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const BaseSet&, const BaseSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// One basis element of a component E_{xy}.
struct Arrow {
  std::string label;
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A vertex sequence (x_0, ..., x_n); its length n is the tensor degree.
struct Path {
  std::vector<VertexId> vertices;

  Path() = default;
  explicit Path(std::vector<VertexId> v) : vertices(std::move(v)) {}

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  /// Sub-path x_begin .. x_end (inclusive vertex indices).
  Path segment(std::size_t begin, std::size_t end) const;
  Path concat(const Path& tail) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// A basis word along a path: letter i is the index of a basis element
/// within the component E_{x_i x_{i+1}}.
using Word = std::vector<std::uint32_t>;

/// An X×X-graded family of finite-dimensional vector spaces, each with an
/// ordered basis of globally unique labels.
class Bimodule {
 public:
  Bimodule(BaseSet base, std::vector<Arrow> arrows);

  const BaseSet& base() const noexcept { return base_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t id) const { return arrows_.at(id); }
  std::optional<std::size_t> find_arrow(const std::string& label) const;

  /// Arrow ids spanning E_{xy}, in basis order.
  std::span<const std::size_t> component(VertexId x, VertexId y) const;
  std::size_t dim(VertexId x, VertexId y) const { return component(x, y).size(); }
  /// Position of an arrow within its component.
  std::uint32_t local_index(std::size_t arrow_id) const { return local_index_.at(arrow_id); }
  /// Arrow id of letter `letter` on edge (x, y).
  std::size_t arrow_at(VertexId x, VertexId y, std::uint32_t letter) const;

  /// Throws unless every vertex of the path is in the base.
  void check_path(const Path& path) const;
  /// Number of basis words along the path (product of component dims).
  std::size_t component_size(const Path& path) const;
  /// Mixed-radix position of a word in tensor_component_basis order.
  std::size_t word_index(const Path& path, const Word& word) const;
  /// All paths of the given length in lexicographic vertex order.  With
  /// `nonzero_only`, paths crossing a zero component are skipped.
  std::vector<Path> paths(std::size_t length, bool nonzero_only) const;

  friend bool operator==(const Bimodule& a, const Bimodule& b) {
    return a.base_ == b.base_ && a.arrows_ == b.arrows_;
  }

 private:
  BaseSet base_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::uint32_t> local_index_;
};

/// Lexicographic product basis of the path component of E^⊗n.  A degree-0
/// path yields the single empty word; a path through a zero component
/// yields no words.
std::vector<Word> tensor_component_basis(const Bimodule& e, const Path& path);

/// A path-homogeneous element of E^⊗n with n >= 1.  Zero coefficients are
/// never stored.
class TensorElem {
 public:
  TensorElem(Field field, Path path);

  Field field() const noexcept { return field_; }
  const Path& path() const noexcept { return path_; }
  std::size_t degree() const { return path_.length(); }
  const std::map<Word, Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Adds c·word, merging with any existing coefficient.
  void add_term(const Word& word, const Scalar& c);
  /// Throws unless every word fits the component dimensions along the path.
  void check_against(const Bimodule& e) const;

  /// Dense coordinates over tensor_component_basis(e, path()).
  Vector to_dense(const Bimodule& e) const;
  static TensorElem from_dense(const Bimodule& e, Field f, const Path& path, const Vector& v);

  friend bool operator==(const TensorElem&, const TensorElem&) = default;

 private:
  Field field_;
  Path path_;
  std::map<Word, Scalar> coeffs_;
};

/// Product in the tensor algebra.  Throws when r ends at a different vertex
/// than s starts.
TensorElem concat(const TensorElem& r, const TensorElem& s);

/// Human-readable form using arrow labels, e.g. `x.y + 4*y.x`.
std::string to_string(const Bimodule& e, const TensorElem& r);

struct Generator {
  std::string name;
  TensorElem elem;

  friend bool operator==(const Generator&, const Generator&) = default;
};

class IdealCache;

/// Generators of a graded two-sided ideal plus a lazily filled, thread-safe
/// cache of reduced bases of each (degree, path) component.
class GradedIdeal {
 public:
  explicit GradedIdeal(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  /// Least generator degree, or nullopt for the zero ideal.
  std::optional<std::size_t> first_degree() const;
  IdealCache& cache() const { return *cache_; }

  friend bool operator==(const GradedIdeal& a, const GradedIdeal& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Generator> generators_;
  std::shared_ptr<IdealCache> cache_;
};

/// B = T(E)/I over a field.
struct AlgebraSpec {
  std::string name;
  Field field;
  Bimodule bimodule;
  GradedIdeal ideal;

  AlgebraSpec(std::string name, Field field, Bimodule bimodule, std::vector<Generator> generators);

  std::optional<std::size_t> first_degree() const { return ideal.first_degree(); }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.field == b.field && a.bimodule == b.bimodule && a.ideal == b.ideal;
  }
};

/// Reduced basis (rows over tensor_component_basis) of the path component
/// of I_n, generated by all products u·g·v.  Memoized per (n, path).
const Matrix& ideal_component(const AlgebraSpec& a, std::size_t n, const Path& path);

/// dim (E^⊗n / I_n) for every path of length n.
std::map<Path, std::size_t> quotient_dims(const AlgebraSpec& a, std::size_t n);

}  // namespace pointscheme
