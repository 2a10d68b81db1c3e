#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mk {

/// Exact signed rational, used for real-valued random variables and
/// user-supplied parameters (grid steps, thresholds, Rényi orders).
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" into a canonical Rational. Decimal literals
/// are rejected.
Rational parseRational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string rationalToString(const Rational& value);

/// Exact nonnegative rational extended with +infinity.
///
/// Finite values are always in lowest terms. Infinity compares greater than
/// every finite value; it is produced by dividing a positive value by zero and
/// absorbs addition and multiplication by positive values. 0/0 and inf*0 are
/// rejected with ZeroOverZero and InfiniteTimesZero.
class Scalar {
 public:
  Scalar() = default;
  Scalar(unsigned long value) : value_(value) {}  // NOLINT(implicit)
  Scalar(unsigned long numerator, unsigned long denominator);
  explicit Scalar(const Rational& value);

  static Scalar infinity();
  static Scalar parse(std::string_view text);

  bool isInfinite() const noexcept { return infinite_; }
  bool isZero() const noexcept { return !infinite_ && sgn(value_) == 0; }
  bool isPositive() const noexcept { return infinite_ || sgn(value_) > 0; }

  /// The finite value. Throws InfiniteWeight on infinity.
  const Rational& rational() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  double toDouble() const;
  std::string toString() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

}  // namespace mk
