#include "pointscheme/module_oracle.hpp"

#include <sstream>

#include "pointscheme/error.hpp"

namespace pointscheme {

namespace {

std::vector<std::size_t> segment_dims(const Bimodule& e, const Path& p, std::size_t i, std::size_t j) {
  std::vector<std::size_t> dims(j);
  for (std::size_t k = 0; k < j; ++k) dims[k] = e.dim(p.vertices[i + k], p.vertices[i + k + 1]);
  return dims;
}

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

std::string word_text(const std::vector<std::size_t>& dims, std::size_t idx) {
  std::string out;
  for (std::size_t pos = dims.size(); pos-- > 0;) {
    out = std::to_string(idx % dims[pos]) + (out.empty() ? "" : ".") + out;
    idx /= dims[pos];
  }
  return out.empty() ? "1" : out;
}

// Scalar of the degree-0 idempotent 1_y acting on m_i.
Scalar unit_action(const ModuleRealization& r, std::size_t i, VertexId y, Field f) {
  return r.path.vertices[i] == y ? Scalar::one(f) : Scalar::zero(f);
}

}  // namespace

RealizeOutcome realize(const AlgebraSpec& a, const Path& path, std::vector<Vector> structure) {
  const Bimodule& e = a.bimodule;
  e.check_path(path);
  const std::size_t n = path.length();
  if (structure.size() != n) throw precondition_error("structure constants do not match path length");
  for (std::size_t i = 0; i < n; ++i) {
    if (structure[i].size() != e.dim(path.vertices[i], path.vertices[i + 1])) {
      throw precondition_error("structure constants of degree " + std::to_string(i) + " have the wrong size");
    }
    bool nonzero = false;
    for (const auto& c : structure[i]) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw precondition_error("μ_{" + std::to_string(i) + ",1} is not surjective");
  }

  RealizeOutcome out;
  ModuleRealization& r = out.module;
  r.algebra = &a;
  r.path = path;
  r.mult = std::move(structure);
  r.extended.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.extended[i].push_back(r.mult[i]);
    for (std::size_t j = 2; i + j <= n; ++j) {
      const Vector& prev = r.extended[i][j - 2];
      const Vector& step = r.mult[i + j - 1];
      Vector next;
      next.reserve(prev.size() * step.size());
      for (const auto& c : prev) {
        for (const auto& s : step) next.push_back(c * s);
      }
      r.extended[i].push_back(std::move(next));
    }
  }

  const auto& gens = a.ideal.generators();
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const TensorElem& g = gens[gi].elem;
    const std::size_t d = g.degree();
    if (d > n) continue;
    for (std::size_t i = 0; i + d <= n; ++i) {
      bool matches = true;
      for (std::size_t k = 0; k <= d && matches; ++k) matches = path.vertices[i + k] == g.path().vertices[k];
      if (!matches) continue;
      const auto dims = segment_dims(e, path, i, d);
      Scalar image = Scalar::zero(a.field);
      for (const auto& [w, c] : g.coeffs()) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < d; ++k) idx = idx * dims[k] + w[k];
        image += c * r.extended[i][d - 1][idx];
      }
      if (!image.is_zero()) {
        out.failure = RealizeFailure{gi, gens[gi].name, i};
        return out;
      }
    }
  }
  return out;
}

RealizeOutcome realize(const AlgebraSpec& a, const PointTuple& t) {
  t.check_against(a.bimodule);
  std::vector<Vector> structure;
  for (const auto& f : t.functionals()) structure.push_back(f.coords());
  return realize(a, t.path(), std::move(structure));
}

ExtensionCheck verify_extension(const ModuleRealization& r) {
  ExtensionCheck check;
  const std::size_t n = r.length();
  if (n == 0) return check;
  const Bimodule& e = r.algebra->bimodule;
  const Field f = r.algebra->field;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.witness = std::move(msg);
    return check;
  };

  if (r.extended.size() != n) return fail("extended table has the wrong number of degrees");
  for (std::size_t i = 0; i < n; ++i) {
    if (r.extended[i].size() != n - i) return fail("extended table at degree " + std::to_string(i) + " is incomplete");
    if (r.extended[i][0] != r.mult[i]) {
      for (std::size_t k = 0; k < r.mult[i].size(); ++k) {
        if (r.extended[i][0][k] != r.mult[i][k]) {
          return fail("mu(" + std::to_string(i) + ",1) on letter " + std::to_string(k) + ": stored " +
                      r.extended[i][0][k].to_string() + ", generator " + r.mult[i][k].to_string());
        }
      }
    }
  }

  // Right-to-left: μ_{i,j}(m_i ⊗ e·w') = φ_i(e) · μ_{i+1,j-1}(m_{i+1} ⊗ w').
  std::vector<std::vector<Vector>> rtl(n + 1);
  for (std::size_t i = n; i-- > 0;) {
    rtl[i].push_back(r.mult[i]);
    for (std::size_t j = 2; i + j <= n; ++j) {
      const Vector& tail = rtl[i + 1][j - 2];
      Vector v;
      v.reserve(r.mult[i].size() * tail.size());
      for (const auto& c : r.mult[i]) {
        for (const auto& t : tail) v.push_back(c * t);
      }
      rtl[i].push_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; i + j <= n; ++j) {
      const auto dims = segment_dims(e, r.path, i, j);
      const Vector& stored = r.extended[i][j - 1];
      if (stored.size() != product(dims)) return fail("extended table has the wrong size");
      for (std::size_t w = 0; w < stored.size(); ++w) {
        if (stored[w] != rtl[i][j - 1][w]) {
          return fail("mu(" + std::to_string(i) + "," + std::to_string(j) + ") on word " + word_text(dims, w) +
                      ": bracketings disagree (" + stored[w].to_string() + " vs " +
                      rtl[i][j - 1][w].to_string() + ")");
        }
      }
    }
  }

  // μ_{i,j+k}(m_i ⊗ w·w') = μ_{i+j,k}(μ_{i,j}(m_i ⊗ w) ⊗ w').
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; i + j < n; ++j) {
      for (std::size_t k = 1; i + j + k <= n; ++k) {
        const Vector& left = r.extended[i][j - 1];
        const Vector& right = r.extended[i + j][k - 1];
        const Vector& whole = r.extended[i][j + k - 1];
        for (std::size_t u = 0; u < left.size(); ++u) {
          for (std::size_t v = 0; v < right.size(); ++v) {
            if (whole[u * right.size() + v] != left[u] * right[v]) {
              return fail("associativity fails for mu(" + std::to_string(i) + "," + std::to_string(j) + ") then mu(" +
                          std::to_string(i + j) + "," + std::to_string(k) + ")");
            }
          }
        }
      }
    }
  }

  // Unit: 1_{x_i} fixes m_i and the other idempotents kill it, before and
  // after any μ_{i,j}.
  for (std::size_t i = 0; i <= n; ++i) {
    for (VertexId y = 0; y < e.base().size(); ++y) {
      const Scalar u = unit_action(r, i, y, f);
      if (u != (y == r.path.vertices[i] ? Scalar::one(f) : Scalar::zero(f))) {
        return fail("unit action wrong at degree " + std::to_string(i));
      }
    }
    if (i == n) break;
    for (std::size_t j = 1; i + j <= n; ++j) {
      const Scalar right_unit = unit_action(r, i + j, r.path.vertices[i + j], f);
      for (const auto& c : r.extended[i][j - 1]) {
        if (c * right_unit != c) return fail("right unit fails at mu(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return check;
}

bool isomorphic(const ModuleRealization& r1, const ModuleRealization& r2) {
  if (r1.algebra == nullptr || r2.algebra == nullptr) return false;
  if (!(*r1.algebra == *r2.algebra) || r1.length() != r2.length()) return false;
  if (r1.path != r2.path) return false;
  for (std::size_t i = 0; i < r1.length(); ++i) {
    Vector a = r1.mult[i];
    Vector b = r2.mult[i];
    if (!normalize(a) || !normalize(b) || a != b) return false;
  }
  return true;
}

std::string dump(const ModuleRealization& r) {
  std::ostringstream os;
  const Bimodule& e = r.algebra->bimodule;
  os << "module path=" << format_path(e, r.path) << " length=" << r.length() << "\n";
  for (std::size_t i = 0; i < r.extended.size(); ++i) {
    for (std::size_t j = 1; j <= r.extended[i].size(); ++j) {
      const auto dims = segment_dims(e, r.path, i, j);
      for (std::size_t w = 0; w < r.extended[i][j - 1].size(); ++w) {
        os << "mu(" << i << "," << j << ")[" << word_text(dims, w) << "] = "
           << r.extended[i][j - 1][w].value_string() << "\n";
      }
    }
  }
  return os.str();
}

}  // namespace pointscheme
