#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace cosetalg {

using Rational = mpq_class;

/// Canonical "p/q" text with q > 0 and gcd(p, q) = 1. Integers keep the "/1".
std::string format_rational(const Rational& value);

/// Accepts "p/q" or "p" (optional sign on p), returns the canonical value.
/// Throws Error(kParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Complex number with arbitrary-precision rational parts. Field operations
/// are exact.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit ExactComplex(Rational re) : re_(std::move(re)) {}
  explicit ExactComplex(long re) : re_(re) {}

  const Rational& real() const noexcept { return re_; }
  const Rational& imag() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }

  /// |z|^2 = z * conj(z).
  Rational norm() const { return re_ * re_ + im_ * im_; }

  ExactComplex& operator+=(const ExactComplex& other) {
    re_ += other.re_;
    im_ += other.im_;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& other) {
    re_ -= other.re_;
    im_ -= other.im_;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& other) {
    Rational re = re_ * other.re_ - im_ * other.im_;
    im_ = re_ * other.im_ + im_ * other.re_;
    re_ = std::move(re);
    return *this;
  }
  ExactComplex& operator*=(const Rational& factor) {
    re_ *= factor;
    im_ *= factor;
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator*(ExactComplex a, const Rational& b) { return a *= b; }
  friend ExactComplex operator*(const Rational& a, ExactComplex b) { return b *= a; }
  friend ExactComplex operator-(const ExactComplex& a) { return ExactComplex(-a.re_, -a.im_); }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Multiplicative inverse; the caller guarantees z != 0.
  ExactComplex reciprocal() const {
    Rational n = norm();
    return ExactComplex(re_ / n, -im_ / n);
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline ExactComplex conj(const ExactComplex& z) { return ExactComplex(z.real(), -z.imag()); }

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

}  // namespace cosetalg
