#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kronmod {

class Scalar;

/// Coefficient field of every computation: either the rationals or a prime
/// field F_p with p an odd prime below 2^62.
///
/// A Field is a small value type; scalars carry the field they belong to and
/// arithmetic between scalars of different fields is rejected.
class Field {
 public:
  /// The rationals.
  Field() = default;

  static Field rational() { return Field(); }
  /// Throws std::invalid_argument unless p is an odd prime < 2^62.
  static Field prime(std::uint64_t p);
  /// Accepts "rational" (or "Q") and "fp:<P>".
  static Field parse(std::string_view spec);

  bool is_rational() const noexcept { return p_ == 0; }
  /// The characteristic; 0 for the rationals.
  std::uint64_t modulus() const noexcept { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "n", "-n" or "n/d". Over F_p the value is reduced modulo p.
  Scalar parse_scalar(std::string_view text) const;

  /// Smallest positive quadratic non-residue. F_p only.
  Scalar non_residue() const;
  /// Canonical representative of the square class of a nonzero scalar:
  /// 1 or the smallest non-residue over F_p, a squarefree integer over Q.
  Scalar square_class(const Scalar& s) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact element of a Field.
///
/// Rationals are kept in lowest terms with positive denominator (GMP does
/// this for us after canonicalize()); residues lie in [0, p-1].
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;

  /// The rational value. Throws std::logic_error over F_p.
  const mpq_class& rational() const;
  /// The residue in [0, p-1]. Throws std::logic_error over Q.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Division by zero throws std::domain_error.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(unsigned long long e) const;

  /// Scalars of different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "n", "n/d" over Q; the decimal residue over F_p.
  std::string to_string() const;

 private:
  friend class Field;

  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

/// Square root when one exists in the field. The returned root is the
/// canonical one: non-negative over Q, the least residue in [0, (p-1)/2]
/// over F_p.
std::optional<Scalar> sqrt_if_square(const Scalar& s);

/// Legendre-style test; true for zero.
bool is_square(const Scalar& s);

}  // namespace kronmod
