#include "ringweight/scalar.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ringweight {

namespace {

long long llabs_ll(long long v) { return v < 0 ? -v : v; }

std::optional<long long> parse_ll(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) return std::nullopt;
  return value;
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(llabs_ll(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_ll(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_ll(text.substr(0, slash));
  auto d = parse_ll(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  long long g = std::gcd(den_, rhs.den_);
  long long scaled_rhs_den = rhs.den_ / g;
  num_ = num_ * scaled_rhs_den + rhs.num_ * (den_ / g);
  den_ = den_ * scaled_rhs_den;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  // Cross-reduce before multiplying to keep intermediates small.
  long long g1 = std::gcd(llabs_ll(num_), rhs.den_);
  long long g2 = std::gcd(llabs_ll(rhs.num_), den_);
  num_ = (num_ / g1) * (rhs.num_ / g2);
  den_ = (den_ / g2) * (rhs.den_ / g1);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division of rationals by zero");
  return *this *= Rational(rhs.den_, rhs.num_);
}

std::string Scalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string out = re_.str();
  if (im_.num() >= 0) out += "+";
  out += im_.str();
  out += "i";
  return out;
}

Scalar Scalar::operator-() const { return Scalar(-re_, -im_); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = re;
  im_ = im;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division of scalars by zero");
  Rational norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  Scalar num = *this * rhs.conj();
  re_ = num.re() / norm;
  im_ = num.im() / norm;
  return *this;
}

}  // namespace ringweight
