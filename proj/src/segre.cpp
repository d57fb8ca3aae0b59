#include "pointscheme/segre.hpp"

#include <set>

#include "pointscheme/error.hpp"

namespace pointscheme {

namespace {

std::vector<std::size_t> edge_dims(const Bimodule& e, const Path& p) {
  std::vector<std::size_t> dims(p.length());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = e.dim(p.vertices[i], p.vertices[i + 1]);
  return dims;
}

Word decode(std::size_t idx, const std::vector<std::size_t>& dims) {
  Word w(dims.size());
  for (std::size_t pos = dims.size(); pos-- > 0;) {
    w[pos] = static_cast<std::uint32_t>(idx % dims[pos]);
    idx /= dims[pos];
  }
  return w;
}

std::size_t encode(const Word& w, const std::vector<std::size_t>& dims) {
  std::size_t idx = 0;
  for (std::size_t pos = 0; pos < dims.size(); ++pos) idx = idx * dims[pos] + w[pos];
  return idx;
}

PointTuple suffix(const PointTuple& t, std::size_t from) {
  return PointTuple(t.path().segment(from, t.length()),
                    std::vector<Functional>(t.functionals().begin() + from, t.functionals().end()));
}

PointTuple single(const PointTuple& t, std::size_t i) {
  return PointTuple(t.path().segment(i, i + 1), {t.functionals()[i]});
}

Matrix row_matrix(Field f, const Vector& v) {
  Matrix m(f, v.size());
  m.add_row(v);
  return m;
}

}  // namespace

BigFunctional segre(const Bimodule& e, const PointTuple& t) {
  if (t.length() == 0) throw precondition_error("segre needs a tuple of length >= 1");
  t.check_against(e);
  const Field f = t.functionals().front().coords().front().field();
  const auto dims = edge_dims(e, t.path());
  const std::size_t total = e.component_size(t.path());
  BigFunctional out{t.length(), t.path(), Vector(total, Scalar::zero(f))};
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Word w = decode(idx, dims);
    Scalar prod = Scalar::one(f);
    for (std::size_t i = 0; i < w.size() && !prod.is_zero(); ++i) prod *= t.functionals()[i][w[i]];
    out.coords[idx] = prod;
  }
  normalize(out.coords);
  return out;
}

BigFunctional segre_pair(const BigFunctional& left, const BigFunctional& right) {
  BigFunctional out{left.degree + right.degree, left.path.concat(right.path),
                    kronecker(left.coords, right.coords)};
  if (!normalize(out.coords)) throw precondition_error("segre product of zero functionals");
  return out;
}

std::optional<PointTuple> segre_preimage(const Bimodule& e, const BigFunctional& b) {
  if (b.degree < 1 || b.path.length() != b.degree) return std::nullopt;
  for (auto v : b.path.vertices) {
    if (v >= e.base().size()) return std::nullopt;
  }
  if (b.coords.size() != e.component_size(b.path) || b.coords.empty()) return std::nullopt;
  std::size_t pivot = 0;
  while (pivot < b.coords.size() && b.coords[pivot].is_zero()) ++pivot;
  if (pivot == b.coords.size()) return std::nullopt;

  const auto dims = edge_dims(e, b.path);
  const Word star = decode(pivot, dims);
  std::vector<Functional> phis;
  for (std::size_t i = 0; i < b.degree; ++i) {
    Vector coords;
    Word w = star;
    for (std::uint32_t letter = 0; letter < dims[i]; ++letter) {
      w[i] = letter;
      coords.push_back(b.coords[encode(w, dims)]);
    }
    phis.emplace_back(b.path.vertices[i], b.path.vertices[i + 1], std::move(coords));
  }
  PointTuple t(b.path, std::move(phis));
  Vector target = b.coords;
  normalize(target);
  if (segre(e, t).coords != target) return std::nullopt;
  return t;
}

bool pullback_membership(const AlgebraSpec& a, const PointTuple& t) {
  if (t.length() == 0) return true;
  const BigFunctional s = segre(a.bimodule, t);
  for (const auto& row : ideal_component(a, t.length(), t.path()).rows) {
    if (!dot(s.coords, row).is_zero()) return false;
  }
  return true;
}

BimoduleQuotient quotient_bimodule(const Bimodule& e, Field f, const std::vector<TensorElem>& sub) {
  std::map<std::pair<VertexId, VertexId>, Matrix> spans;
  for (const auto& s : sub) {
    if (s.degree() != 1) throw precondition_error("subbimodule generators must have degree 1");
    s.check_against(e);
    const auto key = std::make_pair(s.path().front(), s.path().back());
    auto it = spans.try_emplace(key, f, e.dim(key.first, key.second)).first;
    it->second.add_row(s.to_dense(e));
  }
  std::set<std::size_t> dropped;
  for (auto& [key, m] : spans) {
    m = rref(std::move(m));
    for (auto col : pivot_columns(m)) dropped.insert(e.arrow_at(key.first, key.second, static_cast<std::uint32_t>(col)));
  }
  std::vector<Arrow> arrows;
  std::vector<std::optional<std::size_t>> kept(e.arrows().size());
  for (std::size_t id = 0; id < e.arrows().size(); ++id) {
    if (dropped.count(id)) continue;
    kept[id] = arrows.size();
    arrows.push_back(e.arrow(id));
  }
  return BimoduleQuotient{Bimodule(e.base(), std::move(arrows)), std::move(kept), std::move(spans)};
}

bool check_functoriality(const AlgebraSpec& a, const std::vector<TensorElem>& sub, const PointTuple& t) {
  const Bimodule& e = a.bimodule;
  t.check_against(e);
  if (t.length() == 0) throw precondition_error("functoriality check needs a tuple of length >= 1");
  const BimoduleQuotient q = quotient_bimodule(e, a.field, sub);

  std::vector<Functional> descended;
  for (std::size_t i = 0; i < t.length(); ++i) {
    const Functional& phi = t.functionals()[i];
    const auto key = std::make_pair(phi.source(), phi.target());
    if (auto it = q.sub.find(key); it != q.sub.end()) {
      for (const auto& row : it->second.rows) {
        if (!dot(phi.coords(), row).is_zero()) {
          throw precondition_error("functional " + std::to_string(i) + " does not vanish on the subbimodule");
        }
      }
    }
    Vector coords;
    for (std::uint32_t letter = 0; letter < phi.dim(); ++letter) {
      if (q.kept[e.arrow_at(key.first, key.second, letter)]) coords.push_back(phi[letter]);
    }
    descended.emplace_back(key.first, key.second, std::move(coords));
  }
  const BigFunctional lower = segre(q.quotient, PointTuple(t.path(), std::move(descended)));

  // segre(t) must kill the kernel of E^⊗n -> (E')^⊗n before it descends.
  const BigFunctional upper = segre(e, t);
  const auto dims = edge_dims(e, t.path());
  const std::size_t n = t.length();
  for (std::size_t l = 0; l < n; ++l) {
    auto it = q.sub.find({t.path().vertices[l], t.path().vertices[l + 1]});
    if (it == q.sub.end()) continue;
    const std::size_t left = e.component_size(t.path().segment(0, l));
    const std::size_t right = e.component_size(t.path().segment(l + 1, n));
    for (const auto& row : it->second.rows) {
      for (std::size_t u = 0; u < left; ++u) {
        for (std::size_t v = 0; v < right; ++v) {
          Scalar pairing = Scalar::zero(a.field);
          for (std::size_t c = 0; c < row.size(); ++c) {
            pairing += row[c] * upper.coords[(u * dims[l] + c) * right + v];
          }
          if (!pairing.is_zero()) return false;
        }
      }
    }
  }

  Vector restricted;
  for (std::size_t idx = 0; idx < upper.coords.size(); ++idx) {
    const Word w = decode(idx, dims);
    bool all_kept = true;
    for (std::size_t i = 0; i < n && all_kept; ++i) {
      all_kept = q.kept[e.arrow_at(t.path().vertices[i], t.path().vertices[i + 1], w[i])].has_value();
    }
    if (all_kept) restricted.push_back(upper.coords[idx]);
  }
  if (!normalize(restricted)) return false;
  return restricted == lower.coords;
}

bool check_associativity(const Bimodule& e, const PointTuple& t, std::size_t split) {
  if (split < 1 || split >= t.length()) {
    throw precondition_error("split index " + std::to_string(split) + " outside [1, " +
                             std::to_string(t.length()) + ")");
  }
  const BigFunctional paired = segre_pair(segre(e, truncate(t, split)), segre(e, suffix(t, split)));
  return paired == segre(e, t);
}

bool check_pentagon(const Bimodule& e, const PointTuple& t) {
  if (t.length() != 4) throw precondition_error("pentagon check needs a tuple of length 4");
  BigFunctional s[4] = {segre(e, single(t, 0)), segre(e, single(t, 1)), segre(e, single(t, 2)),
                        segre(e, single(t, 3))};
  const BigFunctional reference = segre(e, t);
  const BigFunctional bracketings[] = {
      segre_pair(segre_pair(segre_pair(s[0], s[1]), s[2]), s[3]),
      segre_pair(segre_pair(s[0], segre_pair(s[1], s[2])), s[3]),
      segre_pair(segre_pair(s[0], s[1]), segre_pair(s[2], s[3])),
      segre_pair(s[0], segre_pair(segre_pair(s[1], s[2]), s[3])),
      segre_pair(s[0], segre_pair(s[1], segre_pair(s[2], s[3]))),
  };
  for (const auto& b : bracketings) {
    if (b != reference) return false;
  }
  return true;
}

bool kernel_decomposition_check(const AlgebraSpec& a, const PointTuple& t) {
  if (!is_point(a, t, MembershipMode::window)) {
    throw precondition_error("kernel decomposition needs a point of the scheme");
  }
  const std::size_t n = t.length();
  if (n == 0) return true;
  const Bimodule& e = a.bimodule;
  const Field f = a.field;
  const Matrix lhs = nullspace(row_matrix(f, segre(e, t).coords));

  Matrix rhs(f, e.component_size(t.path()));
  for (std::size_t l = 0; l < n; ++l) {
    const Matrix ker = nullspace(row_matrix(f, t.functionals()[l].coords()));
    const Matrix left = identity(f, e.component_size(t.path().segment(0, l)));
    const Matrix right = identity(f, e.component_size(t.path().segment(l + 1, n)));
    for (auto& row : kronecker(left, kronecker(ker, right)).rows) rhs.add_row(std::move(row));
  }
  return rref(std::move(rhs)).rows == lhs.rows;
}

bool rank_one_minors_vanish(const Bimodule& e, const BigFunctional& b) {
  const auto dims = edge_dims(e, b.path);
  for (std::size_t pos = 0; pos < dims.size(); ++pos) {
    // Flatten: rows = letter at pos, columns = the remaining letters.
    std::vector<std::vector<std::size_t>> by_letter(dims[pos]);
    for (std::size_t idx = 0; idx < b.coords.size(); ++idx) by_letter[decode(idx, dims)[pos]].push_back(idx);
    for (std::size_t r1 = 0; r1 < dims[pos]; ++r1) {
      for (std::size_t r2 = r1 + 1; r2 < dims[pos]; ++r2) {
        const auto& row1 = by_letter[r1];
        const auto& row2 = by_letter[r2];
        for (std::size_t c1 = 0; c1 < row1.size(); ++c1) {
          for (std::size_t c2 = c1 + 1; c2 < row1.size(); ++c2) {
            const Scalar minor = b.coords[row1[c1]] * b.coords[row2[c2]] - b.coords[row1[c2]] * b.coords[row2[c1]];
            if (!minor.is_zero()) return false;
          }
        }
      }
    }
  }
  return true;
}

std::string write_big_functional(const Bimodule& e, const BigFunctional& b) {
  std::string out = format_path(e, b.path) + "\t" + std::to_string(b.degree) + "\t";
  for (std::size_t i = 0; i < b.coords.size(); ++i) {
    if (i) out += ":";
    out += b.coords[i].value_string();
  }
  return out;
}

}  // namespace pointscheme
