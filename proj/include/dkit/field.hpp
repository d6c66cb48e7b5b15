#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace dkit {

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class FieldMismatch : public std::invalid_argument {
public:
  FieldMismatch() : std::invalid_argument("coefficients belong to different fields") {}
};

/// Residue class modulo a prime p < 2^31. The modulus travels with the value
/// so that mixing elements of different prime fields is caught.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;
};

/// Exact scalar of GF(p) or Q. Values are always canonical: residues lie in
/// [0, p), rationals are reduced with a positive denominator.
class Coef {
public:
  explicit Coef(Residue r);
  explicit Coef(mpq_class q);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  /// 0 for Q.
  std::uint32_t characteristic() const;

  Coef operator+(const Coef& o) const;
  Coef operator-(const Coef& o) const;
  Coef operator*(const Coef& o) const;
  Coef operator/(const Coef& o) const;
  Coef operator-() const;
  Coef& operator+=(const Coef& o) { return *this = *this + o; }
  Coef& operator-=(const Coef& o) { return *this = *this - o; }
  Coef& operator*=(const Coef& o) { return *this = *this * o; }

  Coef inverse() const;
  Coef pow(std::uint64_t e) const;

  bool operator==(const Coef& o) const;
  bool operator!=(const Coef& o) const { return !(*this == o); }

  /// Residues print in [0, p); rationals as "a" or "a/b".
  std::string to_string() const;

  const Residue* residue() const { return std::get_if<Residue>(&value_); }
  const mpq_class* rational() const { return std::get_if<mpq_class>(&value_); }

private:
  std::variant<Residue, mpq_class> value_;
};

/// The coefficient field: GF(p) for a prime p, or Q.
class Field {
public:
  static Field prime(std::uint64_t p);
  static Field rationals();
  /// 0 selects Q; anything else must be a prime.
  static Field from_characteristic(std::uint64_t c);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Coef zero() const { return from_int(0); }
  Coef one() const { return from_int(1); }
  Coef from_int(std::int64_t v) const;
  Coef from_mpz(const mpz_class& v) const;
  Coef from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool contains(const Coef& c) const;
  /// "GF(p)" or "QQ".
  std::string to_string() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace dkit
