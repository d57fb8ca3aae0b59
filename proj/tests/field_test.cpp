#include <doctest.h>

#include "pointscheme/error.hpp"
#include "pointscheme/field.hpp"

using namespace pointscheme;

TEST_CASE("prime field arithmetic") {
  const Field f5 = Field::prime(5);
  const Scalar two(f5, 2), three(f5, 3);
  CHECK(arith(two, three, ArithOp::mul) == Scalar(f5, 1));
  CHECK(arith(two, Scalar::zero(f5), ArithOp::add) == two);
  CHECK(arith(two, three, ArithOp::sub) == Scalar(f5, 4));
  CHECK(arith(two, three, ArithOp::div) == Scalar(f5, 4));
  CHECK(Scalar(f5, -1).residue() == 4);
  CHECK(Scalar(f5, 17).residue() == 2);
}

TEST_CASE("rational arithmetic stays reduced") {
  const Field q = Field::rationals();
  const Scalar half = parse_scalar(q, "1/2");
  const Scalar third = parse_scalar(q, "1/3");
  CHECK((half + third).to_string() == "5/6");
  CHECK(parse_scalar(q, "4/-6").to_string() == "-2/3");
  CHECK((half * Scalar(q, 2)).is_one());
  // Large intermediates must not overflow.
  Scalar big = Scalar::one(q);
  for (int i = 0; i < 40; ++i) big *= parse_scalar(q, "1000000007/3");
  CHECK((big / big).is_one());
}

TEST_CASE("inverses") {
  const Field f5 = Field::prime(5);
  CHECK(inv(Scalar(f5, 2)) == Scalar(f5, 3));
  CHECK(inv(Scalar::one(f5)) == Scalar::one(f5));
  CHECK(inv(Scalar::one(Field::rationals())).is_one());
  CHECK_THROWS_AS(inv(Scalar::zero(f5)), Error);
  CHECK_THROWS_AS(inv(Scalar::zero(Field::rationals())), Error);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK_THROWS_AS(Field::prime(std::uint64_t{1} << 31), Error);
  CHECK(Field::prime(2147483647).modulus() == 2147483647u);
  const Scalar a(Field::prime(5), 1), b(Field::prime(7), 1);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(arith(a, Scalar::zero(Field::prime(5)), ArithOp::div), Error);
  CHECK_THROWS_AS(parse_scalar(Field::prime(3), "1/3"), Error);
}

TEST_CASE("large prime products do not overflow") {
  const Field f = Field::prime(2147483647);
  const Scalar a(f, 2147483646);
  CHECK(a * a == Scalar::one(f));
  CHECK((a + a).residue() == 2147483645u);
}

TEST_CASE("enumerate_field") {
  auto f2 = enumerate_field(Field::prime(2));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].residue() == 0);
  CHECK(f2[1].residue() == 1);
  auto f3 = enumerate_field(Field::prime(3));
  REQUIRE(f3.size() == 3);
  for (std::uint32_t i = 0; i < 3; ++i) CHECK(f3[i].residue() == i);
  CHECK_THROWS_AS(enumerate_field(Field::rationals()), Error);
}

TEST_CASE("field axioms hold exhaustively for p <= 7") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field f = Field::prime(p);
    const auto els = enumerate_field(f);
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    for (const auto& a : els) {
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a + (-a) == zero);
      if (!a.is_zero()) {
        CHECK(a * inv(a) == one);
        CHECK(inv(inv(a)) == a);
      }
      for (const auto& b : els) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : els) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("context-free text round trip") {
  for (std::uint32_t p : {2u, 5u, 7u}) {
    for (const auto& s : enumerate_field(Field::prime(p))) CHECK(parse_scalar(s.to_string()) == s);
  }
  for (const char* text : {"0", "1", "-3", "5/6", "-22/7"}) {
    const Scalar s = parse_scalar(text);
    CHECK(s.to_string() == text);
    CHECK(parse_scalar(s.to_string()) == s);
  }
  CHECK(parse_scalar("5:3") == Scalar(Field::prime(5), 3));
  CHECK_THROWS_AS(parse_scalar("5:7"), Error);
  CHECK_THROWS_AS(parse_scalar("6:1"), Error);
  CHECK_THROWS_AS(parse_scalar("x"), Error);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
}
