#include "support/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace pointscheme::testing {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw std::logic_error("no inverse");
}

std::vector<std::vector<std::uint32_t>> leading_one_vectors(std::size_t d, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> v(d);
    std::uint64_t c = code;
    for (std::size_t i = d; i-- > 0;) {
      v[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (lead != v.end() && *lead == 1) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<RawTuple> brute_force_gamma(const AlgebraSpec& a, std::size_t n) {
  const std::uint32_t p = a.field.modulus();
  const Bimodule& e = a.bimodule;
  const std::size_t nv = e.base().size();
  std::vector<RawTuple> out;

  std::vector<std::size_t> path(n + 1, 0);
  std::uint64_t path_total = 1;
  for (std::size_t i = 0; i <= n; ++i) path_total *= nv;
  for (std::uint64_t code = 0; code < path_total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = n + 1; i-- > 0;) {
      path[i] = c % nv;
      c /= nv;
    }
    std::vector<std::vector<std::vector<std::uint32_t>>> choices(n);
    bool empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      choices[i] = leading_one_vectors(e.dim(path[i], path[i + 1]), p);
      empty = empty || choices[i].empty();
    }
    if (empty) continue;

    std::vector<std::size_t> pick(n, 0);
    while (true) {
      RawTuple t{path, {}};
      for (std::size_t i = 0; i < n; ++i) t.coords.push_back(choices[i][pick[i]]);

      bool ok = true;
      for (const auto& g : a.ideal.generators()) {
        const auto& gp = g.elem.path().vertices;
        const std::size_t d = gp.size() - 1;
        if (d > n) continue;
        for (std::size_t s = 0; s + d <= n && ok; ++s) {
          if (!std::equal(gp.begin(), gp.end(), path.begin() + s)) continue;
          std::uint64_t sum = 0;
          for (const auto& [word, coeff] : g.elem.coeffs()) {
            std::uint64_t term = coeff.residue();
            for (std::size_t k = 0; k < d; ++k) term = term * t.coords[s + k][word[k]] % p;
            sum = (sum + term) % p;
          }
          ok = sum == 0;
        }
        if (!ok) break;
      }
      if (ok) out.push_back(std::move(t));

      std::size_t pos = n;
      while (pos > 0 && ++pick[pos - 1] == choices[pos - 1].size()) pick[--pos] = 0;
      if (pos == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RawTuple> to_raw(const std::vector<PointTuple>& points) {
  std::vector<RawTuple> out;
  for (const auto& t : points) {
    RawTuple r{t.path().vertices, {}};
    for (const auto& f : t.functionals()) {
      std::vector<std::uint32_t> c;
      for (const auto& s : f.coords()) c.push_back(s.residue());
      r.coords.push_back(std::move(c));
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> normalized_pair(std::int64_t a, std::int64_t b, std::uint32_t p) {
  auto red = [p](std::int64_t v) { return static_cast<std::uint64_t>(((v % p) + p) % p); };
  std::uint64_t x = red(a), y = red(b);
  if (x != 0) return {1, static_cast<std::uint32_t>(y * inverse_mod(x, p) % p)};
  if (y == 0) throw std::logic_error("zero pair");
  return {0, 1};
}

}  // namespace pointscheme::testing
