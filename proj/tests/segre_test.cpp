#include <doctest.h>

#include <set>

#include "pointscheme/algebra_io.hpp"
#include "pointscheme/error.hpp"
#include "pointscheme/segre.hpp"
#include "support/corpus.hpp"

using namespace pointscheme;
using namespace pointscheme::testing;

namespace {

Vector vec(Field f, std::vector<std::int64_t> xs) {
  Vector v;
  for (auto x : xs) v.emplace_back(f, x);
  return v;
}

PointTuple loop_tuple(Field f, std::vector<std::vector<std::int64_t>> coords) {
  std::vector<Functional> phis;
  for (auto& c : coords) phis.emplace_back(0, 0, vec(f, c));
  return PointTuple(Path(std::vector<VertexId>(coords.size() + 1, 0)), std::move(phis));
}

BigFunctional big(Field f, std::size_t degree, std::vector<std::int64_t> coords) {
  return BigFunctional{degree, Path(std::vector<VertexId>(degree + 1, 0)), vec(f, coords)};
}

}  // namespace

TEST_CASE("segre coordinates") {
  const AlgebraSpec free2 = free_algebra(2, 3);
  const Field f = free2.field;
  const Bimodule& e = free2.bimodule;
  // Words xx, xy, yx, yy.
  CHECK(segre(e, loop_tuple(f, {{1, 0}, {0, 1}})).coords == vec(f, {0, 1, 0, 0}));
  CHECK(segre(e, loop_tuple(f, {{1, 1}, {1, 2}})).coords == vec(f, {1, 2, 1, 2}));
  CHECK(segre(e, loop_tuple(f, {{0, 1}, {1, 2}, {1, 0}})).coords == vec(f, {0, 0, 0, 0, 1, 0, 2, 0}));
  CHECK_THROWS_AS(segre(e, PointTuple::vertex(0)), Error);
  CHECK(write_big_functional(e, segre(e, loop_tuple(f, {{1, 1}, {1, 2}}))) == "v,v,v\t2\t1:2:1:2");
}

TEST_CASE("segre on a quiver path") {
  const AlgebraSpec q = parse_algebra(
      "field 3\nvertices 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\narrow c: 2 -> 1\n");
  const Field f = q.field;
  const PointTuple t(Path({0, 1, 0}), {Functional(0, 1, vec(f, {1, 2})), Functional(1, 0, vec(f, {1}))});
  const BigFunctional s = segre(q.bimodule, t);
  CHECK(s.coords == vec(f, {1, 2}));
  CHECK(segre_preimage(q.bimodule, s) == t);
}

TEST_CASE("segre_preimage") {
  const AlgebraSpec free2 = free_algebra(2, 3);
  const Field f = free2.field;
  const Bimodule& e = free2.bimodule;
  CHECK_FALSE(segre_preimage(e, big(f, 2, {1, 0, 0, 1})).has_value());
  CHECK_FALSE(segre_preimage(e, big(f, 2, {0, 0, 0, 0})).has_value());
  CHECK_FALSE(segre_preimage(e, big(f, 2, {1, 0, 0})).has_value());
  CHECK(segre_preimage(e, big(f, 2, {1, 1, 1, 1})) == loop_tuple(f, {{1, 1}, {1, 1}}));
  CHECK(segre_preimage(e, big(f, 2, {0, 0, 2, 1})) == loop_tuple(f, {{0, 1}, {1, 2}}));
  CHECK_FALSE(rank_one_minors_vanish(e, big(f, 2, {1, 0, 0, 1})));
  CHECK(rank_one_minors_vanish(e, big(f, 2, {1, 2, 2, 1})));
}

TEST_CASE("segre is injective, inverts, and has rank one") {
  for (const auto& a : {free_algebra(2, 3), free_algebra(3, 2), two_cycle_quiver(3)}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto tuples = all_tuples(a, n);
      std::set<BigFunctional> images;
      for (const auto& t : tuples) {
        const BigFunctional s = segre(a.bimodule, t);
        images.insert(s);
        CHECK(segre_preimage(a.bimodule, s) == t);
        CHECK(rank_one_minors_vanish(a.bimodule, s));
      }
      CHECK(images.size() == tuples.size());
    }
  }
}

TEST_CASE("segre_pair and associativity") {
  const AlgebraSpec free2 = free_algebra(2, 3);
  const Bimodule& e = free2.bimodule;
  for (const auto& t : all_tuples(free2, 3)) {
    CHECK(check_associativity(e, t, 1));
    CHECK(check_associativity(e, t, 2));
    const auto left = segre_pair(segre(e, truncate(t, 1)), segre(e, PointTuple(t.path().segment(1, 3), {t.functionals()[1], t.functionals()[2]})));
    CHECK(left == segre(e, t));
  }
  const auto t = loop_tuple(free2.field, {{1, 1}, {1, 2}});
  CHECK_THROWS_AS(check_associativity(e, t, 0), Error);
  CHECK_THROWS_AS(check_associativity(e, t, 2), Error);
}

TEST_CASE("pentagon") {
  const AlgebraSpec free2 = free_algebra(2, 2);
  for (const auto& t : all_tuples(free2, 4)) CHECK(check_pentagon(free2.bimodule, t));
  CHECK_THROWS_AS(check_pentagon(free2.bimodule, loop_tuple(free2.field, {{1, 1}})), Error);
}

TEST_CASE("pullback membership matches window membership") {
  for (const auto& a : random_corpus({.count = 20, .seed = 5})) {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const auto& t : all_tuples(a, n)) {
        CHECK(pullback_membership(a, t) == is_point(a, t, MembershipMode::window));
      }
    }
  }
}

TEST_CASE("quotient_bimodule") {
  const AlgebraSpec free3 = free_algebra(3, 3);
  const Field f = free3.field;
  TensorElem z(f, Path({0, 0}));
  z.add_term({2}, Scalar::one(f));
  const auto q = quotient_bimodule(free3.bimodule, f, {z});
  CHECK(q.quotient.dim(0, 0) == 2);
  CHECK(q.kept == std::vector<std::optional<std::size_t>>{0, 1, std::nullopt});

  TensorElem mixed(f, Path({0, 0}));
  mixed.add_term({0}, Scalar::one(f));
  mixed.add_term({1}, Scalar(f, 2));
  const auto qm = quotient_bimodule(free3.bimodule, f, {mixed, mixed});
  CHECK(qm.quotient.dim(0, 0) == 2);
  CHECK_FALSE(qm.kept[0].has_value());

  TensorElem deg2(f, Path({0, 0, 0}));
  deg2.add_term({0, 0}, Scalar::one(f));
  CHECK_THROWS_AS(quotient_bimodule(free3.bimodule, f, {deg2}), Error);
}

TEST_CASE("functoriality along a quotient of E") {
  const AlgebraSpec free3 = free_algebra(3, 3);
  const Field f = free3.field;
  TensorElem z(f, Path({0, 0}));
  z.add_term({2}, Scalar::one(f));
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& t : all_tuples(free3, n)) {
      bool vanishes = true;
      for (const auto& phi : t.functionals()) vanishes = vanishes && phi[2].is_zero();
      if (vanishes) {
        CHECK(check_functoriality(free3, {z}, t));
        ++checked;
      } else {
        CHECK_THROWS_AS(check_functoriality(free3, {z}, t), Error);
      }
    }
  }
  CHECK(checked == 4 + 16 + 64);

  // Subspace spanned by x0 - x1.
  TensorElem diff(f, Path({0, 0}));
  diff.add_term({0}, Scalar::one(f));
  diff.add_term({1}, -Scalar::one(f));
  const auto t = loop_tuple(f, {{1, 1, 2}, {0, 0, 1}});
  CHECK(check_functoriality(free3, {diff}, t));
}

TEST_CASE("kernel decomposition") {
  SUBCASE("commutative plane diagonal point") {
    const AlgebraSpec kxy = commutative_plane(3);
    const Field f = kxy.field;
    const auto t = loop_tuple(f, {{1, 1}, {1, 1}});
    CHECK(kernel_decomposition_check(kxy, t));
    CHECK_THROWS_AS(kernel_decomposition_check(kxy, loop_tuple(f, {{1, 0}, {0, 1}})), Error);
  }
  SUBCASE("quantum plane point of length 3") {
    const AlgebraSpec q = quantum_plane(2, 5);
    const auto t = loop_tuple(q.field, {{1, 1}, {1, 2}, {1, 4}});
    REQUIRE(is_point(q, t, MembershipMode::window));
    CHECK(kernel_decomposition_check(q, t));
  }
  SUBCASE("independent count: the kernel sum has codimension one") {
    // Direct oracle: every elementary tensor with one factor in ker φ_l is
    // killed by ⊗φ, and the kernel has dimension d^n - 1.
    const AlgebraSpec free2 = free_algebra(2, 3);
    for (const auto& t : all_tuples(free2, 2)) {
      CHECK(kernel_decomposition_check(free2, t));
      Matrix span(free2.field, 4);
      for (std::size_t l = 0; l < 2; ++l) {
        const auto ker = nullspace([&] {
          Matrix m(free2.field, 2);
          m.add_row(t.functionals()[l].coords());
          return m;
        }());
        REQUIRE(ker.rows.size() == 1);
        for (std::uint32_t other = 0; other < 2; ++other) {
          Vector unit(2, Scalar::zero(free2.field));
          unit[other] = Scalar::one(free2.field);
          const Vector row = l == 0 ? kronecker(ker.rows[0], unit) : kronecker(unit, ker.rows[0]);
          CHECK(dot(row, segre(free2.bimodule, t).coords).is_zero());
          span.add_row(row);
        }
      }
      CHECK(rref(span).rows.size() == 3);
    }
  }
}
