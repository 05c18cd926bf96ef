#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace symbool {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.  Rendered as "p/q" everywhere, including integers ("3/1").
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>)
      value_ = static_cast<long>(value);
    else
      value_ = static_cast<unsigned long>(value);
  }

  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p/q" or "p" with optional sign.  Throws std::invalid_argument
  /// on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational pow(unsigned exponent) const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, r); zero when r < 0 or r > n.
Rational binomial(long n, long r);

/// n! as an exact rational.
Rational factorial(unsigned n);

}  // namespace symbool
