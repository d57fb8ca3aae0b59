#include "pointscheme/field.hpp"

#include <charconv>
#include <ostream>

#include "pointscheme/error.hpp"

namespace pointscheme {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorKind::arithmetic,
                "mixed-field operands: " + a.field().name() + " and " + b.field().name());
  }
}

std::uint32_t reduce(Field f, std::int64_t v) {
  const auto p = static_cast<std::int64_t>(f.modulus());
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(Field f, const mpz_class& v) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), f.modulus());
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= kMaxModulus) {
    throw precondition_error("field characteristic out of range [2, 2^31): " + std::to_string(p));
  }
  if (!is_prime_number(p)) {
    throw precondition_error("field characteristic is not prime: " + std::to_string(p));
  }
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  return is_prime() ? std::to_string(modulus_) : std::string("Q");
}

Scalar::Scalar(Field field, std::int64_t value) : field_(field) {
  if (field.is_prime()) {
    value_ = reduce(field, value);
  } else {
    value_ = mpq_class(mpz_class(static_cast<long>(value)));
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_prime()) {
    mpq_class q = value;
    q.canonicalize();
    *this = fraction(field, q.get_num(), q.get_den());
  } else {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
  }
}

Scalar Scalar::fraction(Field f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::arithmetic, "division by zero");
  if (!f.is_prime()) {
    mpq_class q(num, den);
    q.canonicalize();
    Scalar s = zero(f);
    s.value_ = std::move(q);
    return s;
  }
  const std::uint32_t d = reduce(f, den);
  if (d == 0) {
    throw Error(ErrorKind::arithmetic, "denominator vanishes in F_" + f.name());
  }
  Scalar n = zero(f);
  n.value_ = reduce(f, num);
  Scalar dd = zero(f);
  dd.value_ = d;
  return n / dd;
}

bool Scalar::is_zero() const noexcept {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r;
  throw precondition_error("residue requested for a rational scalar");
}

mpq_class Scalar::rational() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return mpq_class(*r);
  return std::get<mpq_class>(value_);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto r = std::get_if<std::uint32_t>(&out.value_)) {
    if (*r != 0) *r = field_.modulus() - *r;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::arithmetic, "inverse of zero");
  Scalar out = *this;
  if (auto r = std::get_if<std::uint32_t>(&out.value_)) {
    *r = pow_mod(*r, field_.modulus() - 2, field_.modulus());
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
    q.canonicalize();
  }
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar out = a;
  if (auto r = std::get_if<std::uint32_t>(&out.value_)) {
    std::uint64_t s = std::uint64_t{*r} + std::get<std::uint32_t>(b.value_);
    if (s >= a.field_.modulus()) s -= a.field_.modulus();
    *r = static_cast<std::uint32_t>(s);
  } else {
    std::get<mpq_class>(out.value_) += std::get<mpq_class>(b.value_);
  }
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar out = a;
  if (auto r = std::get_if<std::uint32_t>(&out.value_)) {
    *r = static_cast<std::uint32_t>(std::uint64_t{*r} * std::get<std::uint32_t>(b.value_) %
                                    a.field_.modulus());
  } else {
    std::get<mpq_class>(out.value_) *= std::get<mpq_class>(b.value_);
  }
  return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw Error(ErrorKind::arithmetic, "division by zero");
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_prime()) {
    return std::get<std::uint32_t>(a.value_) <=> std::get<std::uint32_t>(b.value_);
  }
  const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::value_string() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return field_.name() + ":" + value_string();
  return value_string();
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw precondition_error("unknown arithmetic operation");
}

Scalar inv(const Scalar& a) { return a.inverse(); }

std::vector<Scalar> enumerate_field(Field f) {
  if (!f.is_prime()) throw precondition_error("cannot enumerate the rationals");
  std::vector<Scalar> out;
  out.reserve(f.modulus());
  for (std::uint32_t r = 0; r < f.modulus(); ++r) out.emplace_back(f, std::int64_t{r});
  return out;
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw parse_error("malformed number '" + std::string(whole) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw parse_error("malformed number '" + std::string(whole) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

mpq_class parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(text, text));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return Scalar(Field::rationals(), parse_rational(text));
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  auto head = text.substr(0, colon);
  auto tail = text.substr(colon + 1);
  auto [pe, pec] = std::from_chars(head.data(), head.data() + head.size(), p);
  auto [re, rec] = std::from_chars(tail.data(), tail.data() + tail.size(), r);
  if (pec != std::errc{} || pe != head.data() + head.size() || rec != std::errc{} ||
      re != tail.data() + tail.size() || head.empty() || tail.empty()) {
    throw parse_error("malformed scalar '" + std::string(text) + "'");
  }
  const Field f = Field::prime(p);
  if (r >= p) throw parse_error("residue out of range in '" + std::string(text) + "'");
  return Scalar(f, static_cast<std::int64_t>(r));
}

Scalar parse_scalar(Field f, std::string_view text) {
  mpq_class q = parse_rational(text);
  if (!f.is_prime()) return Scalar(f, q);
  try {
    return Scalar::fraction(f, q.get_num(), q.get_den());
  } catch (const Error&) {
    throw parse_error("coefficient '" + std::string(text) + "' is undefined in F_" + f.name());
  }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pointscheme
