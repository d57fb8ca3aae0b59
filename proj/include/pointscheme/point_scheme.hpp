#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pointscheme/bimodule.hpp"

namespace pointscheme {

/// A nonzero functional on E_{xy} up to scalar, stored with its first
/// nonzero coordinate equal to 1.  This is a rank-one quotient of E_{xy}.
class Functional {
 public:
  /// Normalizes `coords`; throws if they are all zero.
  Functional(VertexId source, VertexId target, Vector coords);

  VertexId source() const noexcept { return source_; }
  VertexId target() const noexcept { return target_; }
  const Vector& coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::uint32_t letter) const { return coords_.at(letter); }

  friend bool operator==(const Functional&, const Functional&) = default;
  friend std::strong_ordering operator<=>(const Functional&, const Functional&) = default;

 private:
  VertexId source_;
  VertexId target_;
  Vector coords_;
};

/// A vertex path x_0..x_n with functionals φ_i on E_{x_i x_{i+1}}: a field
/// point of P(E)^⊗n.  Length 0 carries only the vertex x_0.
class PointTuple {
 public:
  PointTuple(Path path, std::vector<Functional> functionals);
  static PointTuple vertex(VertexId v) { return PointTuple(Path({v}), {}); }

  const Path& path() const noexcept { return path_; }
  const std::vector<Functional>& functionals() const noexcept { return functionals_; }
  std::size_t length() const noexcept { return functionals_.size(); }

  /// Throws unless the functional dimensions match the bimodule.
  void check_against(const Bimodule& e) const;

  friend bool operator==(const PointTuple&, const PointTuple&) = default;
  friend std::strong_ordering operator<=>(const PointTuple&, const PointTuple&) = default;

 private:
  Path path_;
  std::vector<Functional> functionals_;
};

/// Field points of Γ_n in canonical order.
struct PointScheme {
  AlgebraSpec algebra;
  std::size_t n = 0;
  std::vector<PointTuple> points;

  Field field() const { return algebra.field; }
  bool contains(const PointTuple& t) const;
  /// Index of t in `points`, or nullopt.
  std::optional<std::size_t> index_of(const PointTuple& t) const;
};

/// Σ_w r[w] ∏ φ_i(w_i).  Throws if the functionals do not run along r's path.
Scalar multilin_eval(std::span<const Functional> phis, const TensorElem& r);
/// Same sum on raw (possibly unnormalized) coordinate vectors; the caller
/// is responsible for matching components.
Scalar multilin_eval_raw(std::span<const Vector> phis, const TensorElem& r);

enum class MembershipMode { window, full };

/// Window mode evaluates each generator on each matching window of
/// consecutive functionals; full mode evaluates every basis element of the
/// path component of I_n on the whole tuple.  The two always agree.
bool is_point(const AlgebraSpec& a, const PointTuple& t, MembershipMode mode);

/// First window (generator index, start position) on which t fails, if any.
struct WindowViolation {
  std::size_t generator;
  std::size_t start;
};
std::optional<WindowViolation> first_window_violation(const AlgebraSpec& a, const PointTuple& t);

/// All normalized functionals on a dim-`dim` space, in lexicographic order.
std::vector<Vector> projective_points(Field f, std::size_t dim);

/// Number of candidate tuples enumerate_gamma would visit for length n
/// (saturates at UINT64_MAX).
std::uint64_t candidate_count(const AlgebraSpec& a, std::size_t n);

/// Every candidate tuple of length n (all paths, all normalized
/// functionals), in canonical order.  Used for exhaustive checks.
std::vector<PointTuple> all_tuples(const AlgebraSpec& a, std::size_t n,
                                   std::uint64_t cap = 10'000'000);

struct EnumerateOptions {
  std::uint64_t cap = 10'000'000;
  unsigned workers = 1;
};

/// Field points of Γ_n.  Refuses with ErrorKind::cap_exceeded when the
/// candidate space exceeds the cap; requires a prime field.
PointScheme enumerate_gamma(const AlgebraSpec& a, std::size_t n, EnumerateOptions opts = {});

/// First m functionals and first m+1 vertices.
PointTuple truncate(const PointTuple& t, std::size_t m);

/// Truncation Γ_n -> Γ_m on field points.
struct TruncationReport {
  std::size_t from = 0;
  std::size_t to = 0;
  /// fibers[j] lists indices into the Γ_n points lying over Γ_m point j.
  std::vector<std::vector<std::size_t>> fibers;
  std::size_t image_size = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
  /// Sorted (fiber size, number of Γ_m points with that fiber size).
  std::vector<std::pair<std::size_t, std::size_t>> fiber_histogram() const;
};

TruncationReport truncation_report(const PointScheme& gamma_n, const PointScheme& gamma_m);

/// The shift map on the image E ⊂ Γ_d of truncation Γ_{d+1} -> Γ_d.
struct SigmaResult {
  std::size_t d = 0;
  /// (p_1..p_d) -> (p_2..p_{d+1}) for each image point, in Γ_d order.
  std::vector<std::pair<PointTuple, PointTuple>> table;
  /// σ(E) ⊆ E.
  bool closed = false;
  /// σ restricted to E is a bijection of E.
  bool permutation = false;
  /// Cycle lengths of σ on E (sorted ascending); only when closed.
  std::vector<std::size_t> cycles;
  /// lcm of cycle lengths when σ is a permutation.
  std::optional<std::uint64_t> order;

  const PointTuple* apply(const PointTuple& p) const;
};

/// Requires every fiber over the image to have exactly one point; otherwise
/// throws naming the first offending point.  This fiber condition is the
/// point-level stand-in for truncation being a closed immersion.
SigmaResult sigma(const PointScheme& gamma_d, const PointScheme& gamma_d1);

struct StabilizationReport {
  std::size_t n_max = 0;
  /// |Γ_n| for each n that could be enumerated.
  std::vector<std::size_t> counts;
  /// steps[k] describes Γ_{k+1} -> Γ_k.
  std::vector<TruncationReport> steps;
  /// Least d with Γ_{n+1} -> Γ_n bijective for all d <= n < n_max.
  std::optional<std::size_t> stable_from;
  std::optional<SigmaResult> sigma;
  /// Set when enumeration stopped early at the cap.
  std::optional<std::string> cap_message;
};

StabilizationReport stabilization_scan(const AlgebraSpec& a, std::size_t n_max,
                                       EnumerateOptions opts = {});

/// `a,b,c` of vertex labels.
std::string format_path(const Bimodule& e, const Path& p);
/// Path then one colon-separated functional per field, tab-separated.
std::string format_point(const Bimodule& e, const PointTuple& t);

/// TSV with header `# gamma n=<n> field=<f> algebra=<name>`.
std::string write_point_scheme(const PointScheme& s);
/// Reads the TSV form back against a known algebra.
PointScheme read_point_scheme(std::string_view tsv, const AlgebraSpec& a);

std::string render_sigma(const AlgebraSpec& a, const SigmaResult& s);
std::string render_stabilization(const AlgebraSpec& a, const StabilizationReport& r);

}  // namespace pointscheme
