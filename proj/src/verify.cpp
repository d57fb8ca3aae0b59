#include "pointscheme/verify.hpp"

#include <map>
#include <sstream>

#include "pointscheme/error.hpp"
#include "pointscheme/module_oracle.hpp"
#include "pointscheme/segre.hpp"

namespace pointscheme {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  template <typename Witness>
  void check(bool ok, Witness&& witness) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = witness();
    }
  }

  PropertyResult take() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::string at(const AlgebraSpec& a, const PointTuple& t) {
  return "at " + format_point(a.bimodule, t);
}

}  // namespace

std::vector<PropertyResult> segre_properties(const AlgebraSpec& a, std::size_t n, EnumerateOptions opts) {
  if (n < 1) throw precondition_error("segre properties need n >= 1");
  const Bimodule& e = a.bimodule;
  const PointScheme gamma = enumerate_gamma(a, n, opts);

  Tally injective("segre_injectivity");
  Tally round_trip("segre_round_trip");
  Tally minors("segre_rank_one_minors");
  Tally assoc("segre_associativity");
  Tally pentagon("segre_pentagon");
  Tally kernel("kernel_decomposition");

  std::map<BigFunctional, std::size_t> seen;
  for (std::size_t i = 0; i < gamma.points.size(); ++i) {
    const PointTuple& t = gamma.points[i];
    const BigFunctional s = segre(e, t);
    auto [it, fresh] = seen.emplace(s, i);
    injective.check(fresh, [&] {
      return "collision between " + format_point(e, gamma.points[it->second]) + " and " + format_point(e, t);
    });
    const auto back = segre_preimage(e, s);
    round_trip.check(back && *back == t, [&] { return at(a, t); });
    minors.check(rank_one_minors_vanish(e, s), [&] { return at(a, t); });
    for (std::size_t split = 1; split < n; ++split) {
      assoc.check(check_associativity(e, t, split), [&] { return at(a, t) + " split " + std::to_string(split); });
    }
    if (n == 4) pentagon.check(check_pentagon(e, t), [&] { return at(a, t); });
    kernel.check(kernel_decomposition_check(a, t), [&] { return at(a, t); });
  }
  return {injective.take(), round_trip.take(), minors.take(), assoc.take(), pentagon.take(), kernel.take()};
}

std::vector<PropertyResult> verify_algebra(const AlgebraSpec& a, const VerifyBounds& bounds) {
  if (!a.field.is_prime()) throw precondition_error("verify requires a prime field");
  const Bimodule& e = a.bimodule;
  std::vector<PointScheme> schemes;
  for (std::size_t n = 0; n <= bounds.max_n; ++n) schemes.push_back(enumerate_gamma(a, n, bounds.enumerate));

  Tally gamma0("gamma0_is_vertex_set");
  const auto& g0 = schemes[0].points;
  gamma0.check(g0.size() == e.base().size(), [&] { return "|Γ_0| = " + std::to_string(g0.size()); });
  for (VertexId v = 0; v < e.base().size() && v < g0.size(); ++v) {
    gamma0.check(g0[v] == PointTuple::vertex(v), [&] { return "vertex " + e.base().label(v); });
  }

  Tally modes("mode_equivalence");
  Tally extension("module_extension");
  Tally scheme_match("enumeration_matches_filter");
  Tally fullness("below_first_degree_fullness");
  Tally invariance("projective_invariance");
  const auto first = a.first_degree();
  for (std::size_t n = 0; n <= bounds.max_n; ++n) {
    const auto tuples = all_tuples(a, n, bounds.enumerate.cap);
    std::size_t members = 0;
    for (const auto& t : tuples) {
      const bool window = is_point(a, t, MembershipMode::window);
      const bool full = is_point(a, t, MembershipMode::full);
      const bool pullback = pullback_membership(a, t);
      const RealizeOutcome real = realize(a, t);
      modes.check(window == full && full == pullback && pullback == real.ok(), [&] {
        std::ostringstream os;
        os << at(a, t) << " window=" << window << " full=" << full << " pullback=" << pullback
           << " realize=" << real.ok();
        return os.str();
      });
      if (real.ok()) {
        const auto ext = verify_extension(real.module);
        extension.check(ext.ok, [&] { return at(a, t) + ": " + ext.witness; });
      }
      if (window) {
        ++members;
        scheme_match.check(schemes[n].contains(t), [&] { return "missing " + at(a, t); });
      }
      if (!first || n < *first) fullness.check(window, [&] { return at(a, t); });
      if (n > 0) {
        // Rescale each functional by a non-identity unit and re-test.
        std::vector<Vector> scaled;
        const Scalar two = Scalar(a.field, std::int64_t{a.field.modulus() > 2 ? 2 : 1});
        for (const auto& f : t.functionals()) {
          Vector v = f.coords();
          for (auto& c : v) c *= two;
          scaled.push_back(std::move(v));
        }
        bool same = true;
        for (const auto& g : a.ideal.generators()) {
          const std::size_t d = g.elem.degree();
          for (std::size_t s = 0; s + d <= n; ++s) {
            if (t.path().segment(s, s + d) != g.elem.path()) continue;
            std::span<const Vector> raw(scaled.data() + s, d);
            std::span<const Functional> norm(t.functionals().data() + s, d);
            same = same && (multilin_eval_raw(raw, g.elem).is_zero() == multilin_eval(norm, g.elem).is_zero());
          }
        }
        invariance.check(same, [&] { return at(a, t); });
      }
    }
    scheme_match.check(members == schemes[n].points.size(), [&] {
      return "n=" + std::to_string(n) + ": filter found " + std::to_string(members) + ", enumeration " +
             std::to_string(schemes[n].points.size());
    });
  }

  Tally closure("truncation_closure");
  Tally functor("truncation_functor");
  for (std::size_t n = 0; n <= bounds.max_n; ++n) {
    for (const auto& t : schemes[n].points) {
      for (std::size_t m = 0; m <= n; ++m) {
        const PointTuple tm = truncate(t, m);
        closure.check(schemes[m].contains(tm), [&] { return at(a, t) + " -> length " + std::to_string(m); });
        for (std::size_t l = 0; l <= m; ++l) {
          functor.check(truncate(tm, l) == truncate(t, l), [&] { return at(a, t); });
        }
      }
    }
  }

  Tally determinism("enumeration_determinism");
  for (std::size_t n = 0; n <= bounds.max_n; ++n) {
    EnumerateOptions other = bounds.enumerate;
    other.workers = other.workers == 1 ? 2 : 1;
    const auto again = enumerate_gamma(a, n, other);
    determinism.check(again.points == schemes[n].points, [&] { return "n=" + std::to_string(n); });
  }

  Tally iso("isomorphism_classes");
  for (std::size_t n = 1; n <= bounds.max_n; ++n) {
    const auto& pts = schemes[n].points;
    if (pts.size() > 400) continue;
    std::vector<ModuleRealization> mods;
    for (const auto& t : pts) mods.push_back(realize(a, t).module);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        iso.check(isomorphic(mods[i], mods[j]) == (i == j),
                  [&] { return format_point(e, pts[i]) + " vs " + format_point(e, pts[j]); });
      }
    }
  }

  std::vector<PropertyResult> out = {gamma0.take(),  modes.take(),      extension.take(),
                                     scheme_match.take(), fullness.take(), invariance.take(),
                                     closure.take(), functor.take(),    determinism.take(),
                                     iso.take()};
  for (std::size_t n = 1; n <= bounds.max_n; ++n) {
    for (auto& r : segre_properties(a, n, bounds.enumerate)) {
      if (n > 3 && r.name == "kernel_decomposition") continue;
      r.name += "_n" + std::to_string(n);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string render_properties(const std::vector<PropertyResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "\t" << r.name << "\tchecked=" << r.checked;
    if (!r.passed) os << "\t" << r.witness;
    os << "\n";
  }
  return os.str();
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace pointscheme
