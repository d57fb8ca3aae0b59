#include "pointscheme/point_scheme.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "pointscheme/error.hpp"

namespace pointscheme {

Functional::Functional(VertexId source, VertexId target, Vector coords)
    : source_(source), target_(target), coords_(std::move(coords)) {
  if (!normalize(coords_)) throw precondition_error("functional coordinates are all zero");
}

PointTuple::PointTuple(Path path, std::vector<Functional> functionals)
    : path_(std::move(path)), functionals_(std::move(functionals)) {
  if (path_.vertices.empty()) throw precondition_error("point tuple needs at least one vertex");
  if (functionals_.size() != path_.length()) {
    throw precondition_error("point tuple has " + std::to_string(functionals_.size()) +
                             " functionals for a path of length " + std::to_string(path_.length()));
  }
  for (std::size_t i = 0; i < functionals_.size(); ++i) {
    if (functionals_[i].source() != path_.vertices[i] ||
        functionals_[i].target() != path_.vertices[i + 1]) {
      throw precondition_error("functional " + std::to_string(i) + " is not on edge " +
                               std::to_string(i) + " of the path");
    }
  }
}

void PointTuple::check_against(const Bimodule& e) const {
  e.check_path(path_);
  for (const auto& f : functionals_) {
    if (f.dim() != e.dim(f.source(), f.target())) {
      throw precondition_error("functional dimension does not match its component");
    }
  }
}

std::optional<std::size_t> PointScheme::index_of(const PointTuple& t) const {
  auto it = std::lower_bound(points.begin(), points.end(), t);
  if (it == points.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

bool PointScheme::contains(const PointTuple& t) const { return index_of(t).has_value(); }

namespace {

Scalar product_on_word(std::span<const Functional> phis, const Word& w, Field f) {
  Scalar prod = Scalar::one(f);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Scalar& c = phis[i][w[i]];
    if (c.is_zero()) return Scalar::zero(f);
    prod *= c;
  }
  return prod;
}

// Evaluates a dense row over the path component on the whole tuple.
Scalar eval_dense_row(const Bimodule& e, const PointTuple& t, const Vector& row, Field f) {
  const auto& verts = t.path().vertices;
  const std::size_t n = t.length();
  std::vector<std::size_t> dims(n);
  for (std::size_t i = 0; i < n; ++i) dims[i] = e.dim(verts[i], verts[i + 1]);
  Scalar sum = Scalar::zero(f);
  for (std::size_t idx = 0; idx < row.size(); ++idx) {
    if (row[idx].is_zero()) continue;
    Scalar term = row[idx];
    std::size_t rest = idx;
    for (std::size_t pos = n; pos-- > 0 && !term.is_zero();) {
      const auto letter = static_cast<std::uint32_t>(rest % dims[pos]);
      rest /= dims[pos];
      term *= t.functionals()[pos][letter];
    }
    sum += term;
  }
  return sum;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

std::uint64_t projective_size(std::uint32_t p, std::size_t dim) {
  // (p^dim - 1) / (p - 1) = 1 + p + ... + p^(dim-1)
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total = saturating_add(total, power);
    power = saturating_mul(power, p);
  }
  return total;
}

void require_prime(const AlgebraSpec& a) {
  if (!a.field.is_prime()) {
    throw precondition_error("point enumeration requires a prime field (field is Q)");
  }
}

// Functionals available on each nonzero component, keyed by (x, y).
using FunctionalTable = std::map<std::pair<VertexId, VertexId>, std::vector<Functional>>;

FunctionalTable functional_table(const AlgebraSpec& a) {
  FunctionalTable table;
  const Bimodule& e = a.bimodule;
  for (VertexId x = 0; x < e.base().size(); ++x) {
    for (VertexId y = 0; y < e.base().size(); ++y) {
      const std::size_t d = e.dim(x, y);
      if (d == 0) continue;
      auto& list = table[{x, y}];
      for (auto& v : projective_points(a.field, d)) list.emplace_back(x, y, std::move(v));
    }
  }
  return table;
}

// Generators whose window ends exactly at position `end` (exclusive) of the
// path, with their window start.
struct WindowCheck {
  const TensorElem* gen;
  std::size_t start;
};

std::vector<std::vector<WindowCheck>> windows_by_end(const AlgebraSpec& a, const Path& path) {
  const std::size_t n = path.length();
  std::vector<std::vector<WindowCheck>> out(n + 1);
  for (const auto& g : a.ideal.generators()) {
    const std::size_t d = g.elem.degree();
    if (g.elem.is_zero() || d > n) continue;
    for (std::size_t s = 0; s + d <= n; ++s) {
      if (path.segment(s, s + d) == g.elem.path()) out[s + d].push_back({&g.elem, s});
    }
  }
  return out;
}

template <typename Visit>
void walk_tuples(const AlgebraSpec& a, const FunctionalTable& table, const Path& path,
                 std::size_t first_index, bool prune, Visit&& visit) {
  const std::size_t n = path.length();
  const auto windows = prune ? windows_by_end(a, path) : std::vector<std::vector<WindowCheck>>{};
  std::vector<const std::vector<Functional>*> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    choices[i] = &table.at({path.vertices[i], path.vertices[i + 1]});
  }
  std::vector<Functional> current;
  current.reserve(n);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      visit(PointTuple(path, current));
      return;
    }
    const auto& opts = *choices[pos];
    const std::size_t lo = pos == 0 ? first_index : 0;
    const std::size_t hi = pos == 0 ? first_index + 1 : opts.size();
    for (std::size_t k = lo; k < hi; ++k) {
      current.push_back(opts[k]);
      bool ok = true;
      if (prune) {
        for (const auto& w : windows[pos + 1]) {
          std::span<const Functional> slice(current.data() + w.start, w.gen->degree());
          if (!multilin_eval(slice, *w.gen).is_zero()) {
            ok = false;
            break;
          }
        }
      }
      if (ok) self(self, pos + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

void check_cap(const AlgebraSpec& a, std::size_t n, std::uint64_t cap) {
  const std::uint64_t count = candidate_count(a, n);
  if (count > cap) {
    throw Error(ErrorKind::cap_exceeded, "enumeration of length " + std::to_string(n) +
                                             " would visit " + std::to_string(count) +
                                             " candidate tuples (cap " + std::to_string(cap) + ")");
  }
}

}  // namespace

Scalar multilin_eval(std::span<const Functional> phis, const TensorElem& r) {
  if (phis.size() != r.degree()) {
    throw precondition_error("multilinear evaluation needs " + std::to_string(r.degree()) +
                             " functionals, got " + std::to_string(phis.size()));
  }
  const auto& verts = r.path().vertices;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (phis[i].source() != verts[i] || phis[i].target() != verts[i + 1]) {
      throw precondition_error("functional " + std::to_string(i) + " does not match the element's path");
    }
  }
  Scalar sum = Scalar::zero(r.field());
  for (const auto& [w, c] : r.coeffs()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= phis[i].dim()) throw precondition_error("word letter outside functional domain");
    }
    const Scalar prod = product_on_word(phis, w, r.field());
    if (!prod.is_zero()) sum += c * prod;
  }
  return sum;
}

Scalar multilin_eval_raw(std::span<const Vector> phis, const TensorElem& r) {
  if (phis.size() != r.degree()) throw precondition_error("functional count does not match degree");
  Scalar sum = Scalar::zero(r.field());
  for (const auto& [w, c] : r.coeffs()) {
    Scalar prod = c;
    for (std::size_t i = 0; i < w.size(); ++i) prod *= phis[i].at(w[i]);
    sum += prod;
  }
  return sum;
}

std::optional<WindowViolation> first_window_violation(const AlgebraSpec& a, const PointTuple& t) {
  t.check_against(a.bimodule);
  const std::size_t n = t.length();
  const auto& gens = a.ideal.generators();
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const TensorElem& g = gens[gi].elem;
    const std::size_t d = g.degree();
    if (g.is_zero() || d > n) continue;
    for (std::size_t s = 0; s + d <= n; ++s) {
      if (t.path().segment(s, s + d) != g.path()) continue;
      std::span<const Functional> slice(t.functionals().data() + s, d);
      if (!multilin_eval(slice, g).is_zero()) return WindowViolation{gi, s};
    }
  }
  return std::nullopt;
}

bool is_point(const AlgebraSpec& a, const PointTuple& t, MembershipMode mode) {
  if (mode == MembershipMode::window) return !first_window_violation(a, t).has_value();
  t.check_against(a.bimodule);
  const std::size_t n = t.length();
  if (n == 0) return true;
  const Matrix& basis = ideal_component(a, n, t.path());
  for (const auto& row : basis.rows) {
    if (!eval_dense_row(a.bimodule, t, row, a.field).is_zero()) return false;
  }
  return true;
}

std::vector<Vector> projective_points(Field f, std::size_t dim) {
  if (!f.is_prime()) throw precondition_error("projective points are enumerated over prime fields only");
  std::vector<Vector> out;
  if (dim == 0) return out;
  const std::uint32_t p = f.modulus();
  // Lexicographic order of normalized vectors: zeros first, then the leading
  // 1, then free trailing coordinates.
  for (std::size_t lead = dim; lead-- > 0;) {
    const std::size_t free = dim - lead - 1;
    std::vector<std::uint32_t> tail(free, 0);
    while (true) {
      Vector v(dim, Scalar::zero(f));
      v[lead] = Scalar::one(f);
      for (std::size_t i = 0; i < free; ++i) v[lead + 1 + i] = Scalar(f, std::int64_t{tail[i]});
      out.push_back(std::move(v));
      std::size_t pos = free;
      while (pos > 0 && ++tail[pos - 1] == p) tail[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return out;
}

std::uint64_t candidate_count(const AlgebraSpec& a, std::size_t n) {
  require_prime(a);
  const Bimodule& e = a.bimodule;
  if (n == 0) return e.base().size();
  std::uint64_t total = 0;
  for (const auto& path : e.paths(n, true)) {
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      prod = saturating_mul(prod, projective_size(a.field.modulus(), e.dim(path.vertices[i], path.vertices[i + 1])));
    }
    total = saturating_add(total, prod);
  }
  return total;
}

std::vector<PointTuple> all_tuples(const AlgebraSpec& a, std::size_t n, std::uint64_t cap) {
  require_prime(a);
  check_cap(a, n, cap);
  std::vector<PointTuple> out;
  if (n == 0) {
    for (VertexId v = 0; v < a.bimodule.base().size(); ++v) out.push_back(PointTuple::vertex(v));
    return out;
  }
  const auto table = functional_table(a);
  for (const auto& path : a.bimodule.paths(n, true)) {
    const auto& first = table.at({path.vertices[0], path.vertices[1]});
    for (std::size_t k = 0; k < first.size(); ++k) {
      walk_tuples(a, table, path, k, false, [&](PointTuple t) { out.push_back(std::move(t)); });
    }
  }
  return out;
}

PointScheme enumerate_gamma(const AlgebraSpec& a, std::size_t n, EnumerateOptions opts) {
  require_prime(a);
  check_cap(a, n, opts.cap);
  PointScheme scheme{a, n, {}};
  if (n == 0) {
    for (VertexId v = 0; v < a.bimodule.base().size(); ++v) scheme.points.push_back(PointTuple::vertex(v));
    return scheme;
  }

  const auto table = functional_table(a);
  struct Item {
    const Path* path;
    std::size_t first;
  };
  const auto paths = a.bimodule.paths(n, true);
  std::vector<Item> items;
  for (const auto& path : paths) {
    const auto& first = table.at({path.vertices[0], path.vertices[1]});
    for (std::size_t k = 0; k < first.size(); ++k) items.push_back({&path, k});
  }

  std::vector<std::vector<PointTuple>> results(items.size());
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        walk_tuples(a, table, *items[i].path, items[i].first, true,
                    [&](PointTuple t) { results[i].push_back(std::move(t)); });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = items.size();
    }
  };
  const unsigned workers = std::max(1u, opts.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& r : results) {
    for (auto& t : r) scheme.points.push_back(std::move(t));
  }
  std::sort(scheme.points.begin(), scheme.points.end());
  scheme.points.erase(std::unique(scheme.points.begin(), scheme.points.end()), scheme.points.end());
  return scheme;
}

PointTuple truncate(const PointTuple& t, std::size_t m) {
  if (m > t.length()) {
    throw precondition_error("cannot truncate a tuple of length " + std::to_string(t.length()) +
                             " to length " + std::to_string(m));
  }
  return PointTuple(t.path().segment(0, m),
                    std::vector<Functional>(t.functionals().begin(), t.functionals().begin() + m));
}

std::vector<std::pair<std::size_t, std::size_t>> TruncationReport::fiber_histogram() const {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& f : fibers) ++hist[f.size()];
  return {hist.begin(), hist.end()};
}

TruncationReport truncation_report(const PointScheme& gamma_n, const PointScheme& gamma_m) {
  if (!(gamma_n.algebra == gamma_m.algebra)) {
    throw precondition_error("truncation between point schemes of different algebras");
  }
  if (gamma_m.n > gamma_n.n) throw precondition_error("truncation target is longer than its source");
  TruncationReport rep;
  rep.from = gamma_n.n;
  rep.to = gamma_m.n;
  rep.fibers.assign(gamma_m.points.size(), {});
  for (std::size_t i = 0; i < gamma_n.points.size(); ++i) {
    const PointTuple image = truncate(gamma_n.points[i], gamma_m.n);
    auto j = gamma_m.index_of(image);
    if (!j) {
      throw precondition_error("truncated point " + format_point(gamma_n.algebra.bimodule, image) +
                               " is missing from the target scheme");
    }
    rep.fibers[*j].push_back(i);
  }
  rep.injective = true;
  rep.surjective = true;
  for (const auto& f : rep.fibers) {
    if (!f.empty()) ++rep.image_size;
    if (f.size() > 1) rep.injective = false;
    if (f.empty()) rep.surjective = false;
  }
  return rep;
}

const PointTuple* SigmaResult::apply(const PointTuple& p) const {
  auto it = std::lower_bound(table.begin(), table.end(), p,
                             [](const auto& entry, const PointTuple& key) { return entry.first < key; });
  if (it == table.end() || it->first != p) return nullptr;
  return &it->second;
}

SigmaResult sigma(const PointScheme& gamma_d, const PointScheme& gamma_d1) {
  if (gamma_d1.n != gamma_d.n + 1) {
    throw precondition_error("sigma needs schemes of lengths d and d+1");
  }
  const TruncationReport rep = truncation_report(gamma_d1, gamma_d);
  const Bimodule& e = gamma_d.algebra.bimodule;
  SigmaResult out;
  out.d = gamma_d.n;
  for (std::size_t j = 0; j < rep.fibers.size(); ++j) {
    const auto& fiber = rep.fibers[j];
    if (fiber.empty()) continue;
    if (fiber.size() != 1) {
      throw precondition_error("truncation fiber over " + format_point(e, gamma_d.points[j]) +
                               " has " + std::to_string(fiber.size()) + " points");
    }
    const PointTuple& lift = gamma_d1.points[fiber.front()];
    PointTuple shifted(lift.path().segment(1, lift.length()),
                       std::vector<Functional>(lift.functionals().begin() + 1, lift.functionals().end()));
    out.table.emplace_back(gamma_d.points[j], std::move(shifted));
  }

  // Functional graph of σ on E, when σ(E) ⊆ E.
  const std::size_t size = out.table.size();
  std::vector<std::size_t> next(size);
  out.closed = true;
  for (std::size_t i = 0; i < size; ++i) {
    auto it = std::lower_bound(out.table.begin(), out.table.end(), out.table[i].second,
                               [](const auto& entry, const PointTuple& key) { return entry.first < key; });
    if (it == out.table.end() || it->first != out.table[i].second) {
      out.closed = false;
      break;
    }
    next[i] = static_cast<std::size_t>(it - out.table.begin());
  }
  if (!out.closed) return out;

  std::vector<bool> hit(size, false);
  for (auto j : next) hit[j] = true;
  out.permutation = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

  // 0 = unvisited, 1 = on current walk, 2 = done.
  std::vector<int> state(size, 0);
  for (std::size_t s = 0; s < size; ++s) {
    std::vector<std::size_t> walk;
    std::size_t cur = s;
    while (state[cur] == 0) {
      state[cur] = 1;
      walk.push_back(cur);
      cur = next[cur];
    }
    if (state[cur] == 1) {
      auto pos = std::find(walk.begin(), walk.end(), cur);
      out.cycles.push_back(static_cast<std::size_t>(walk.end() - pos));
    }
    for (auto w : walk) state[w] = 2;
  }
  std::sort(out.cycles.begin(), out.cycles.end());
  if (out.permutation) {
    std::uint64_t order = 1;
    for (auto c : out.cycles) order = std::lcm(order, static_cast<std::uint64_t>(c));
    out.order = order;
  }
  return out;
}

StabilizationReport stabilization_scan(const AlgebraSpec& a, std::size_t n_max, EnumerateOptions opts) {
  require_prime(a);
  if (n_max < 1) throw precondition_error("stabilization scan needs n_max >= 1");
  StabilizationReport rep;
  rep.n_max = n_max;
  std::vector<PointScheme> schemes;
  for (std::size_t n = 0; n <= n_max; ++n) {
    try {
      schemes.push_back(enumerate_gamma(a, n, opts));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::cap_exceeded) throw;
      rep.cap_message = e.what();
      break;
    }
    rep.counts.push_back(schemes.back().points.size());
    if (n >= 1) rep.steps.push_back(truncation_report(schemes[n], schemes[n - 1]));
  }
  if (schemes.empty()) return rep;
  const std::size_t last = schemes.size() - 1;
  for (std::size_t d = 0; d < last; ++d) {
    bool ok = true;
    for (std::size_t k = d; k < last; ++k) ok = ok && rep.steps[k].bijective();
    if (ok) {
      rep.stable_from = d;
      break;
    }
  }
  if (rep.stable_from) rep.sigma = sigma(schemes[*rep.stable_from], schemes[*rep.stable_from + 1]);
  return rep;
}

std::string format_path(const Bimodule& e, const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) out += ",";
    out += e.base().label(p.vertices[i]);
  }
  return out;
}

std::string format_point(const Bimodule& e, const PointTuple& t) {
  std::string out = format_path(e, t.path());
  for (const auto& f : t.functionals()) {
    out += "\t";
    for (std::size_t i = 0; i < f.dim(); ++i) {
      if (i) out += ":";
      out += f.coords()[i].value_string();
    }
  }
  return out;
}

std::string write_point_scheme(const PointScheme& s) {
  std::ostringstream os;
  os << "# gamma n=" << s.n << " field=" << s.field().name() << " algebra=" << s.algebra.name << "\n";
  for (const auto& t : s.points) os << format_point(s.algebra.bimodule, t) << "\n";
  return os.str();
}

PointScheme read_point_scheme(std::string_view tsv, const AlgebraSpec& a) {
  std::istringstream is{std::string(tsv)};
  std::string line;
  if (!std::getline(is, line) || line.rfind("# gamma n=", 0) != 0) {
    throw parse_error("missing '# gamma' header");
  }
  std::size_t n = 0;
  {
    std::istringstream hs(line.substr(10));
    hs >> n;
    if (!hs) throw parse_error("malformed length in header");
  }
  const std::string field_tag = "field=" + a.field.name() + " ";
  if (line.find(" " + field_tag) == std::string::npos) throw parse_error("header field does not match algebra");
  PointScheme s{a, n, {}};
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      cells.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cells.size() != n + 1) throw parse_error("line " + std::to_string(line_no) + ": wrong number of fields");
    Path path;
    std::size_t pos = 0;
    while (true) {
      auto comma = cells[0].find(',', pos);
      const std::string label = cells[0].substr(pos, comma == std::string::npos ? comma : comma - pos);
      auto v = a.bimodule.base().find(label);
      if (!v) throw parse_error("line " + std::to_string(line_no) + ": unknown vertex '" + label + "'");
      path.vertices.push_back(*v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (path.length() != n) throw parse_error("line " + std::to_string(line_no) + ": path length mismatch");
    std::vector<Functional> phis;
    for (std::size_t i = 0; i < n; ++i) {
      Vector coords;
      std::size_t cpos = 0;
      while (true) {
        auto colon = cells[i + 1].find(':', cpos);
        coords.push_back(parse_scalar(a.field, cells[i + 1].substr(cpos, colon == std::string::npos ? colon : colon - cpos)));
        if (colon == std::string::npos) break;
        cpos = colon + 1;
      }
      phis.emplace_back(path.vertices[i], path.vertices[i + 1], std::move(coords));
    }
    PointTuple t(path, std::move(phis));
    t.check_against(a.bimodule);
    s.points.push_back(std::move(t));
  }
  std::sort(s.points.begin(), s.points.end());
  return s;
}

namespace {

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out.empty() ? "-" : out;
}

}  // namespace

std::string render_sigma(const AlgebraSpec& a, const SigmaResult& s) {
  std::ostringstream os;
  os << "# sigma d=" << s.d << " field=" << a.field.name() << " algebra=" << a.name
     << " (point-level: every truncation fiber over the image has one point)\n";
  for (const auto& [from, to] : s.table) {
    os << format_point(a.bimodule, from) << "\t->\t" << format_point(a.bimodule, to) << "\n";
  }
  os << "image\t" << s.table.size() << "\n";
  os << "closed\t" << (s.closed ? "true" : "false") << "\n";
  os << "permutation\t" << (s.permutation ? "true" : "false") << "\n";
  os << "cycles\t" << (s.closed ? join_sizes(s.cycles) : "-") << "\n";
  os << "order\t" << (s.order ? std::to_string(*s.order) : "-") << "\n";
  return os.str();
}

std::string render_stabilization(const AlgebraSpec& a, const StabilizationReport& r) {
  std::ostringstream os;
  os << "# stabilize max=" << r.n_max << " field=" << a.field.name() << " algebra=" << a.name << "\n";
  os << "n\tpoints\n";
  for (std::size_t n = 0; n < r.counts.size(); ++n) os << n << "\t" << r.counts[n] << "\n";
  os << "step\timage\tinjective\tsurjective\tbijective\tfibers\n";
  for (const auto& s : r.steps) {
    os << s.from << "->" << s.to << "\t" << s.image_size << "\t" << (s.injective ? "true" : "false")
       << "\t" << (s.surjective ? "true" : "false") << "\t" << (s.bijective() ? "true" : "false") << "\t";
    bool first = true;
    for (const auto& [size, count] : s.fiber_histogram()) {
      os << (first ? "" : ",") << size << "x" << count;
      first = false;
    }
    os << "\n";
  }
  if (r.cap_message) os << "partial\t" << *r.cap_message << "\n";
  if (r.stable_from) {
    os << "stable_from\t" << *r.stable_from << "\t(point-level)\n";
  } else {
    os << "stable_from\tnone\n";
  }
  if (r.sigma) {
    const auto& s = *r.sigma;
    os << "sigma\td=" << s.d << "\tclosed=" << (s.closed ? "true" : "false")
       << "\tpermutation=" << (s.permutation ? "true" : "false") << "\tcycles=" << join_sizes(s.cycles)
       << "\torder=" << (s.order ? std::to_string(*s.order) : "-") << "\n";
  }
  return os.str();
}

}  // namespace pointscheme
