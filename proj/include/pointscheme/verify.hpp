#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pointscheme/bimodule.hpp"
#include "pointscheme/point_scheme.hpp"

namespace pointscheme {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string witness;
};

struct VerifyBounds {
  std::size_t max_n = 3;
  EnumerateOptions enumerate;
};

/// Exhaustive invariant checks on one algebra for every length up to
/// bounds.max_n.  Requires a prime field.
std::vector<PropertyResult> verify_algebra(const AlgebraSpec& a, const VerifyBounds& bounds);

/// Segre injectivity, round trip, rank-one minors, associativity and kernel
/// decomposition on the points of Γ_n.
std::vector<PropertyResult> segre_properties(const AlgebraSpec& a, std::size_t n, EnumerateOptions opts = {});

/// One `PASS|FAIL<TAB>name<TAB>checked=K[<TAB>witness]` line per property.
std::string render_properties(const std::vector<PropertyResult>& results);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace pointscheme
