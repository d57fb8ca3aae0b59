#include "support/corpus.hpp"

#include <random>

#include "pointscheme/algebra_io.hpp"
#include "pointscheme/point_scheme.hpp"

namespace pointscheme::testing {

namespace {

std::string header(std::uint32_t p) { return "field " + std::to_string(p) + "\n"; }

}  // namespace

AlgebraSpec free_algebra(std::size_t dim, std::uint32_t p) {
  std::string text = header(p) + "vertices v\n";
  for (std::size_t i = 0; i < dim; ++i) text += "arrow x" + std::to_string(i) + ": v -> v\n";
  return parse_algebra(text, "free" + std::to_string(dim));
}

AlgebraSpec commutative_plane(std::uint32_t p) {
  return parse_algebra(header(p) + "vertices v\narrow x: v -> v\narrow y: v -> v\nrel c: x.y - y.x\n", "kxy");
}

AlgebraSpec quantum_plane(std::int64_t q, std::uint32_t p) {
  return parse_algebra(header(p) + "vertices v\narrow x: v -> v\narrow y: v -> v\nrel q: x.y - " +
                           std::to_string(q) + "*y.x\n",
                       "qplane");
}

AlgebraSpec jordan_plane(std::uint32_t p) {
  return parse_algebra(header(p) + "vertices v\narrow x: v -> v\narrow y: v -> v\nrel j: x.y - y.x - y.y\n",
                       "jordan");
}

AlgebraSpec single_cubic(std::uint32_t p) {
  return parse_algebra(header(p) + "vertices v\narrow x: v -> v\narrow y: v -> v\nrel c: x.x.y - y.x.x + x.y.y\n",
                       "cubic");
}

AlgebraSpec two_cycle_quiver(std::uint32_t p) {
  return parse_algebra(header(p) + "vertices 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n", "cycle2");
}

std::vector<AlgebraSpec> random_corpus(const CorpusOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  std::vector<AlgebraSpec> out;
  std::size_t attempt = 0;
  while (out.size() < opts.count) {
    ++attempt;
    const std::uint32_t p = uniform(0, 1) ? 3 : 2;
    const Field f = Field::prime(p);
    const std::size_t nv = uniform(1, 2);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < nv; ++v) labels.push_back("v" + std::to_string(v));
    std::vector<Arrow> arrows;
    for (VertexId x = 0; x < nv; ++x) {
      for (VertexId y = 0; y < nv; ++y) {
        const std::size_t d = uniform(0, 3);
        for (std::size_t k = 0; k < d; ++k) {
          arrows.push_back(Arrow{"e" + std::to_string(arrows.size()), x, y});
        }
      }
    }
    if (arrows.empty()) continue;
    Bimodule e(BaseSet(labels), arrows);

    std::vector<Generator> gens;
    const std::size_t ngen = uniform(1, 3);
    for (std::size_t g = 0; g < ngen; ++g) {
      // Degree 1 relations are rare so most schemes stay nonempty.
      const std::size_t deg = uniform(0, 9) == 0 ? 1 : uniform(2, 3);
      auto paths = e.paths(deg, true);
      if (paths.empty()) continue;
      const Path& path = paths[uniform(0, paths.size() - 1)];
      const auto basis = tensor_component_basis(e, path);
      TensorElem elem(f, path);
      const std::size_t terms = uniform(1, std::min<std::size_t>(basis.size(), 3));
      for (std::size_t t = 0; t < terms; ++t) {
        elem.add_term(basis[uniform(0, basis.size() - 1)], Scalar(f, static_cast<std::int64_t>(uniform(1, p - 1))));
      }
      if (elem.is_zero()) continue;
      gens.push_back(Generator{"g" + std::to_string(g), std::move(elem)});
    }
    if (gens.empty()) continue;
    AlgebraSpec a("random" + std::to_string(attempt), f, e, std::move(gens));
    if (candidate_count(a, opts.max_n) > opts.budget) continue;
    if (a.bimodule.paths(opts.max_n, true).empty()) continue;
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace pointscheme::testing
