#include "pointscheme/bimodule.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>

#include "pointscheme/error.hpp"

namespace pointscheme {

BaseSet::BaseSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw precondition_error("base set must be nonempty");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw precondition_error("duplicate vertex label '" + l + "'");
  }
}

std::optional<VertexId> BaseSet::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

Path Path::segment(std::size_t begin, std::size_t end) const {
  if (begin > end || end >= vertices.size()) throw precondition_error("path segment out of range");
  return Path(std::vector<VertexId>(vertices.begin() + begin, vertices.begin() + end + 1));
}

Path Path::concat(const Path& tail) const {
  if (vertices.empty()) return tail;
  if (tail.vertices.empty()) return *this;
  if (back() != tail.front()) throw precondition_error("paths are not composable");
  Path out = *this;
  out.vertices.insert(out.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
  return out;
}

Bimodule::Bimodule(BaseSet base, std::vector<Arrow> arrows)
    : base_(std::move(base)), arrows_(std::move(arrows)) {
  const std::size_t v = base_.size();
  components_.assign(v * v, {});
  local_index_.reserve(arrows_.size());
  std::set<std::string> seen;
  for (std::size_t id = 0; id < arrows_.size(); ++id) {
    const Arrow& a = arrows_[id];
    if (a.source >= v || a.target >= v) {
      throw precondition_error("arrow '" + a.label + "' has an endpoint outside the base");
    }
    if (!seen.insert(a.label).second) {
      throw precondition_error("basis label '" + a.label + "' is not unique");
    }
    auto& comp = components_[a.source * v + a.target];
    local_index_.push_back(static_cast<std::uint32_t>(comp.size()));
    comp.push_back(id);
  }
}

std::optional<std::size_t> Bimodule::find_arrow(const std::string& label) const {
  for (std::size_t id = 0; id < arrows_.size(); ++id) {
    if (arrows_[id].label == label) return id;
  }
  return std::nullopt;
}

std::span<const std::size_t> Bimodule::component(VertexId x, VertexId y) const {
  if (x >= base_.size() || y >= base_.size()) throw precondition_error("vertex outside the base");
  return components_[x * base_.size() + y];
}

std::size_t Bimodule::arrow_at(VertexId x, VertexId y, std::uint32_t letter) const {
  auto comp = component(x, y);
  if (letter >= comp.size()) throw precondition_error("letter outside component basis");
  return comp[letter];
}

void Bimodule::check_path(const Path& path) const {
  if (path.vertices.empty()) throw precondition_error("empty path");
  for (auto v : path.vertices) {
    if (v >= base_.size()) throw precondition_error("path vertex outside the base");
  }
}

std::size_t Bimodule::component_size(const Path& path) const {
  check_path(path);
  std::size_t n = 1;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    n *= dim(path.vertices[i], path.vertices[i + 1]);
  }
  return n;
}

std::size_t Bimodule::word_index(const Path& path, const Word& word) const {
  if (word.size() != path.length()) throw precondition_error("word length does not match path");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::size_t d = dim(path.vertices[i], path.vertices[i + 1]);
    if (word[i] >= d) throw precondition_error("word letter outside component basis");
    idx = idx * d + word[i];
  }
  return idx;
}

std::vector<Path> Bimodule::paths(std::size_t length, bool nonzero_only) const {
  std::vector<Path> out;
  std::vector<VertexId> current;
  auto rec = [&](auto&& self) -> void {
    if (current.size() == length + 1) {
      out.emplace_back(current);
      return;
    }
    for (VertexId v = 0; v < base_.size(); ++v) {
      if (!current.empty() && nonzero_only && dim(current.back(), v) == 0) continue;
      current.push_back(v);
      self(self);
      current.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<Word> tensor_component_basis(const Bimodule& e, const Path& path) {
  const std::size_t total = e.component_size(path);
  std::vector<Word> out;
  out.reserve(total);
  if (total == 0) return out;
  const std::size_t n = path.length();
  std::vector<std::uint32_t> dims(n);
  for (std::size_t i = 0; i < n; ++i) {
    dims[i] = static_cast<std::uint32_t>(e.dim(path.vertices[i], path.vertices[i + 1]));
  }
  Word w(n, 0);
  for (std::size_t k = 0; k < total; ++k) {
    out.push_back(w);
    for (std::size_t pos = n; pos-- > 0;) {
      if (++w[pos] < dims[pos]) break;
      w[pos] = 0;
    }
  }
  return out;
}

TensorElem::TensorElem(Field field, Path path) : field_(field), path_(std::move(path)) {
  if (path_.length() < 1) throw precondition_error("tensor elements have degree >= 1");
}

void TensorElem::add_term(const Word& word, const Scalar& c) {
  if (word.size() != degree()) throw precondition_error("word length does not match degree");
  if (c.field() != field_) throw Error(ErrorKind::arithmetic, "coefficient from another field");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void TensorElem::check_against(const Bimodule& e) const {
  e.check_path(path_);
  for (const auto& [w, c] : coeffs_) e.word_index(path_, w);
}

Vector TensorElem::to_dense(const Bimodule& e) const {
  Vector v(e.component_size(path_), Scalar::zero(field_));
  for (const auto& [w, c] : coeffs_) v[e.word_index(path_, w)] = c;
  return v;
}

TensorElem TensorElem::from_dense(const Bimodule& e, Field f, const Path& path, const Vector& v) {
  TensorElem out(f, path);
  const auto basis = tensor_component_basis(e, path);
  if (basis.size() != v.size()) throw precondition_error("dense vector does not match component");
  for (std::size_t i = 0; i < v.size(); ++i) out.add_term(basis[i], v[i]);
  return out;
}

TensorElem concat(const TensorElem& r, const TensorElem& s) {
  if (r.field() != s.field()) throw Error(ErrorKind::arithmetic, "concat across fields");
  if (r.path().back() != s.path().front()) {
    throw precondition_error("concat of non-composable elements (end vertex " +
                             std::to_string(r.path().back()) + " != start vertex " +
                             std::to_string(s.path().front()) + ")");
  }
  TensorElem out(r.field(), r.path().concat(s.path()));
  Word w;
  for (const auto& [wr, cr] : r.coeffs()) {
    for (const auto& [ws, cs] : s.coeffs()) {
      w = wr;
      w.insert(w.end(), ws.begin(), ws.end());
      out.add_term(w, cr * cs);
    }
  }
  return out;
}

std::string to_string(const Bimodule& e, const TensorElem& r) {
  if (r.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& verts = r.path().vertices;
  for (const auto& [w, c] : r.coeffs()) {
    Scalar shown = c;
    bool negative = false;
    if (!c.field().is_prime() && c.rational() < 0) {
      negative = true;
      shown = -c;
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (!shown.is_one()) os << shown.value_string() << "*";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ".";
      os << e.arrow(e.arrow_at(verts[i], verts[i + 1], w[i])).label;
    }
  }
  return os.str();
}

class IdealCache {
 public:
  const Matrix* find(std::size_t n, const Path& path) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find({n, path});
    return it == entries_.end() ? nullptr : &it->second;
  }

  const Matrix& insert(std::size_t n, const Path& path, Matrix m) {
    std::unique_lock lock(mutex_);
    return entries_.try_emplace({n, path}, std::move(m)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::size_t, Path>, Matrix> entries_;
};

GradedIdeal::GradedIdeal(std::vector<Generator> generators)
    : generators_(std::move(generators)), cache_(std::make_shared<IdealCache>()) {
  std::stable_sort(generators_.begin(), generators_.end(), [](const auto& a, const auto& b) {
    return a.elem.degree() < b.elem.degree();
  });
}

std::optional<std::size_t> GradedIdeal::first_degree() const {
  std::optional<std::size_t> m;
  for (const auto& g : generators_) {
    if (g.elem.is_zero()) continue;
    if (!m || g.elem.degree() < *m) m = g.elem.degree();
  }
  return m;
}

AlgebraSpec::AlgebraSpec(std::string n, Field f, Bimodule e, std::vector<Generator> generators)
    : name(std::move(n)), field(f), bimodule(std::move(e)), ideal(std::move(generators)) {
  for (const auto& g : ideal.generators()) {
    if (g.elem.field() != field) {
      throw precondition_error("generator '" + g.name + "' has coefficients in another field");
    }
    g.elem.check_against(bimodule);
  }
}

namespace {

Matrix build_ideal_component(const AlgebraSpec& a, std::size_t n, const Path& path) {
  const Bimodule& e = a.bimodule;
  const std::size_t total = e.component_size(path);
  Matrix m(a.field, total);
  if (total == 0) return m;
  for (const auto& g : a.ideal.generators()) {
    const std::size_t d = g.elem.degree();
    if (d > n || g.elem.is_zero()) continue;
    const std::size_t gsize = e.component_size(g.elem.path());
    for (std::size_t i = 0; i + d <= n; ++i) {
      if (path.segment(i, i + d) != g.elem.path()) continue;
      const std::size_t left = e.component_size(path.segment(0, i));
      const std::size_t right = e.component_size(path.segment(i + d, n));
      for (std::size_t u = 0; u < left; ++u) {
        for (std::size_t v = 0; v < right; ++v) {
          Vector row(total, Scalar::zero(a.field));
          for (const auto& [w, c] : g.elem.coeffs()) {
            const std::size_t mid = e.word_index(g.elem.path(), w);
            row[(u * gsize + mid) * right + v] = c;
          }
          m.add_row(std::move(row));
        }
      }
    }
  }
  return rref(std::move(m));
}

}  // namespace

const Matrix& ideal_component(const AlgebraSpec& a, std::size_t n, const Path& path) {
  if (n < 1) throw precondition_error("ideal components are indexed by degree >= 1");
  if (path.length() != n) throw precondition_error("path length does not match degree");
  a.bimodule.check_path(path);
  IdealCache& cache = a.ideal.cache();
  if (const Matrix* hit = cache.find(n, path)) return *hit;
  return cache.insert(n, path, build_ideal_component(a, n, path));
}

std::map<Path, std::size_t> quotient_dims(const AlgebraSpec& a, std::size_t n) {
  std::map<Path, std::size_t> out;
  for (const auto& p : a.bimodule.paths(n, false)) {
    const std::size_t total = a.bimodule.component_size(p);
    out[p] = n == 0 ? 1 : total - ideal_component(a, n, p).row_count();
  }
  return out;
}

}  // namespace pointscheme
