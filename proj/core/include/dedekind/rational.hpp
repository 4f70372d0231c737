#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dedekind {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is represented as 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<long>(value)) {}

  Rational(const Integer& value)  // NOLINT(google-explicit-constructor)
      : value_(value) {}

  /// Throws std::domain_error when `denominator` is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "p/q" or a plain integer literal, with an optional leading sign.
  /// Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Largest integer not exceeding this value (rounds toward negative infinity).
  Integer floor() const;

  /// Fractional part x - floor(x), always in [0, 1).
  Rational frac() const;

  Rational abs() const;

  /// Integer power; negative exponents invert. Throws std::domain_error for 0^e, e < 0.
  Rational pow(long exponent) const;

  double to_double() const { return value_.get_d(); }

  /// Canonical text: "p/q", or "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

inline Rational frac(const Rational& x) { return x.frac(); }

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// gcd on machine integers, always non-negative.
long gcd(long a, long b);

}  // namespace dedekind
