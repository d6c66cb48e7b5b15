#include "dkit/field.hpp"

#include <limits>
#include <utility>

namespace dkit {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

const Residue& same_field(const Residue& a, const Coef& b) {
  const Residue* r = b.residue();
  if (r == nullptr || r->modulus != a.modulus) throw FieldMismatch();
  return *r;
}

const mpq_class& same_field(const mpq_class&, const Coef& b) {
  const mpq_class* q = b.rational();
  if (q == nullptr) throw FieldMismatch();
  return *q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Coef::Coef(Residue r) : value_(r) { value_ = Residue{r.value % r.modulus, r.modulus}; }

Coef::Coef(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

bool Coef::is_zero() const {
  if (auto r = residue()) return r->value == 0;
  return sgn(*rational()) == 0;
}

bool Coef::is_one() const {
  if (auto r = residue()) return r->value == 1;
  return *rational() == 1;
}

std::uint32_t Coef::characteristic() const {
  if (auto r = residue()) return r->modulus;
  return 0;
}

Coef Coef::operator+(const Coef& o) const {
  if (auto a = residue()) {
    const Residue& b = same_field(*a, o);
    std::uint64_t s = std::uint64_t{a->value} + b.value;
    if (s >= a->modulus) s -= a->modulus;
    return Coef(Residue{static_cast<std::uint32_t>(s), a->modulus});
  }
  return Coef(mpq_class(*rational() + same_field(*rational(), o)));
}

Coef Coef::operator-(const Coef& o) const {
  if (auto a = residue()) {
    const Residue& b = same_field(*a, o);
    std::uint64_t s = std::uint64_t{a->value} + a->modulus - b.value;
    if (s >= a->modulus) s -= a->modulus;
    return Coef(Residue{static_cast<std::uint32_t>(s), a->modulus});
  }
  return Coef(mpq_class(*rational() - same_field(*rational(), o)));
}

Coef Coef::operator*(const Coef& o) const {
  if (auto a = residue()) {
    const Residue& b = same_field(*a, o);
    const std::uint64_t prod = std::uint64_t{a->value} * b.value % a->modulus;
    return Coef(Residue{static_cast<std::uint32_t>(prod), a->modulus});
  }
  return Coef(mpq_class(*rational() * same_field(*rational(), o)));
}

Coef Coef::operator/(const Coef& o) const {
  if (characteristic() != o.characteristic()) throw FieldMismatch();
  return *this * o.inverse();
}

Coef Coef::operator-() const {
  if (auto a = residue())
    return Coef(Residue{a->value == 0 ? 0 : a->modulus - a->value, a->modulus});
  return Coef(mpq_class(-*rational()));
}

Coef Coef::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (auto a = residue()) return Coef(Residue{mod_inverse(a->value, a->modulus), a->modulus});
  return Coef(mpq_class(1 / *rational()));
}

Coef Coef::pow(std::uint64_t e) const {
  Coef base = *this;
  Coef result = residue() ? Coef(Residue{1, residue()->modulus}) : Coef(mpq_class(1));
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Coef::operator==(const Coef& o) const {
  if (auto a = residue()) {
    auto b = o.residue();
    return b != nullptr && a->modulus == b->modulus && a->value == b->value;
  }
  auto b = o.rational();
  return b != nullptr && *rational() == *b;
}

std::string Coef::to_string() const {
  if (auto a = residue()) return std::to_string(a->value);
  return rational()->get_str();
}

Field Field::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::int32_t>::max())
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is too large (limit 2^31)");
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::rationals() { return Field(0); }

Field Field::from_characteristic(std::uint64_t c) { return c == 0 ? rationals() : prime(c); }

Coef Field::from_int(std::int64_t v) const {
  if (p_ == 0) return Coef(mpq_class(mpz_class(static_cast<long>(v))));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Coef(Residue{static_cast<std::uint32_t>(r), p_});
}

Coef Field::from_mpz(const mpz_class& v) const {
  if (p_ == 0) return Coef(mpq_class(v));
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return Coef(Residue{static_cast<std::uint32_t>(r.get_ui()), p_});
}

Coef Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw DivisionByZero();
  return from_mpz(num) / from_mpz(den);
}

bool Field::contains(const Coef& c) const { return c.characteristic() == p_; }

std::string Field::to_string() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

}  // namespace dkit
