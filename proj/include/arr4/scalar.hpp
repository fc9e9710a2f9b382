#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arr4 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient field of an arrangement. Every scalar of one arrangement lives
/// in the same field.
enum class Field { rational, quadratic_tau };

std::string_view to_string(Field field);

/**
 * Exact element a + b*tau of Q(tau), tau = (1 + sqrt 5) / 2, tau^2 = tau + 1.
 *
 * Rationals are the elements with b = 0. Both coordinates are kept in lowest
 * terms by GMP, so two scalars are equal iff their (a, b) pairs are equal.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar tau() { return Scalar(Rational(0), Rational(1)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// Exact sign in {-1, 0, +1}.
  int sign() const;

  /// Galois conjugate (a + b) - b*tau, i.e. sqrt 5 -> -sqrt 5.
  Scalar conjugate() const { return Scalar(a_ + b_, -b_); }
  /// Field norm x * conjugate(x) = a^2 + ab - b^2.
  Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
  /// Multiplicative inverse; x must be nonzero.
  Scalar inverse() const;

  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y);
  Scalar& operator/=(const Scalar& y);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Order of the real numbers, decided exactly.
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  /// Structural order on (a, b); cheaper than the real order, used for keys.
  friend bool structural_less(const Scalar& x, const Scalar& y) {
    if (int c = cmp(x.a_, y.a_); c != 0) return c < 0;
    return cmp(x.b_, y.b_) < 0;
  }

 private:
  Rational a_;
  Rational b_;
};

bool structural_less(const Scalar& x, const Scalar& y);

inline int sign(const Scalar& x) { return x.sign(); }

/// "p", "p/q", "a+b*t" or "a-b*t" (b always written, a always written).
std::string to_string(const Scalar& x);
std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Parses a rational "p" or "p/q" (q > 0); throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// Parses "a", "a+b*t", "a-b*t" and the shorthands "t", "b*t", "-t", "a+t".
Scalar parse_scalar(std::string_view text);

}  // namespace arr4
