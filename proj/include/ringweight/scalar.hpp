#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ringweight {

/// Exact rational number on 64-bit numerator/denominator.
/// Always normalized: gcd(|num|, den) == 1 and den > 0.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Accepts "a" or "a/b" with an optional leading minus.
  static std::optional<Rational> parse(std::string_view text);

  /// "a/b" in lowest terms, "a" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  long long num_ = 0;
  long long den_ = 1;

  void normalize();
};

/// Gaussian rational: the value re + im*i with both parts exact rationals.
/// All weight and algebra values in this library live here; equality and the
/// zero test are exact.
class Scalar {
 public:
  constexpr Scalar() = default;
  constexpr Scalar(long long n) : re_(n) {}  // NOLINT: implicit by design
  Scalar(Rational re) : re_(re) {}           // NOLINT: implicit by design
  Scalar(Rational re, Rational im) : re_(re), im_(im) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  /// "a/b" for real values, otherwise "a/b+c/di" with an explicit sign.
  std::string str() const;

  Scalar operator-() const;
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);  // throws std::domain_error on zero divisor

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace ringweight
