#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pointscheme {

/// The coefficient field: either the rationals or a prime field F_p with
/// 2 <= p < 2^31.  Primality is checked at construction.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return modulus_ == 0 ? Kind::rationals : Kind::prime; }
  bool is_prime() const noexcept { return modulus_ != 0; }
  /// Characteristic for prime fields, 0 for the rationals.
  std::uint32_t modulus() const noexcept { return modulus_; }

  /// `Q` or the decimal prime, as used in algebra files.
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  Field() = default;
  explicit Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// An exact field element.  Residues are kept in [0, p); fractions are kept
/// in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar(Field field, std::int64_t value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f, std::int64_t{0}); }
  static Scalar one(Field f) { return Scalar(f, std::int64_t{1}); }
  /// num/den in the field; den must be invertible.
  static Scalar fraction(Field f, const mpz_class& num, const mpz_class& den);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue in [0, p).  Only valid over a prime field.
  std::uint32_t residue() const;
  /// Value as a rational number (residue over F_p).
  mpq_class rational() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order: residue order over F_p, numeric order over Q.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Bare value: residue for F_p, `a` or `a/b` for Q.
  std::string value_string() const;
  /// Context-free form: `p:<residue>` or `a/b`.
  std::string to_string() const;

 private:
  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

enum class ArithOp { add, sub, mul, div };

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);
Scalar inv(const Scalar& a);

/// All p elements of a prime field in ascending residue order.
std::vector<Scalar> enumerate_field(Field f);

/// Parses the context-free form written by Scalar::to_string.
Scalar parse_scalar(std::string_view text);
/// Parses an integer or fraction `a/b` as an element of `f`.
Scalar parse_scalar(Field f, std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

}  // namespace pointscheme
