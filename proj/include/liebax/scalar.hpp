#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liebax {

/// Raised for violated preconditions and malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign, decimal digits). The result is reduced.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Non-negative rational square root when it exists.
std::optional<Rational> rational_sqrt(const Rational& q);

/// q = factor^2 * d with d a square-free integer.
struct SquarefreeSplit {
  std::int64_t d;
  Rational factor;
};
SquarefreeSplit squarefree_part(const Rational& q);

bool is_squarefree(std::int64_t d);

/// The scalar field Q(sqrt d). d == 1 denotes Q itself.
class Field {
 public:
  Field() = default;
  explicit Field(std::int64_t d);

  std::int64_t d() const { return d_; }
  bool is_rational() const { return d_ == 1; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  std::int64_t d_ = 1;
};

/// An element a + b*sqrt(d) of Q(sqrt d). Elements with b == 0 are plain
/// rationals and combine with scalars of any field; combining two irrational
/// scalars from different fields throws.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}
  Scalar(long v) : a_(v) {}
  Scalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }
  /// Checked constructor; d must be square-free and different from 0 and 1.
  Scalar(Rational a, Rational b, std::int64_t d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  /// 1 for rational elements.
  std::int64_t d() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  Scalar conjugate() const;
  /// a^2 - d b^2
  Rational norm() const;
  /// Multiplicative inverse via conjugate over norm. Throws on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

  std::string to_string() const;

 private:
  static std::int64_t join(std::int64_t d1, std::int64_t d2);
  void normalize() {
    if (sgn(b_) == 0) d_ = 1;
  }

  Rational a_;
  Rational b_;
  std::int64_t d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// z * result == 1.
Scalar quad_inverse(const Scalar& z);

/// A square root of z inside the given field, if one exists there.
std::optional<Scalar> sqrt_in_field(const Scalar& z, const Field& field);

}  // namespace liebax
