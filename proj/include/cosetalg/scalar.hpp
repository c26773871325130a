#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <string_view>

#include "cosetalg/rational.hpp"
#include "cosetalg/sqrt_sum.hpp"

namespace cosetalg {

using FloatComplex = std::complex<double>;

/// Arithmetic realization of the scalar field C. ExactComplex is the default;
/// FloatComplex is the approximate mode and compares with an absolute
/// tolerance. `Real` is the type norms take values in.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactComplex> {
  using Real = SqrtSum;
  using Squared = Rational;
  static constexpr bool kExact = true;
  static constexpr std::string_view kModeName = "exact";

  static ExactComplex make(const Rational& re, const Rational& im = Rational(0)) {
    return ExactComplex(re, im);
  }
  static ExactComplex conj(const ExactComplex& z) { return cosetalg::conj(z); }
  static bool is_zero(const ExactComplex& z) { return z.is_zero(); }
  static SqrtSum modulus(const ExactComplex& z) { return SqrtSum::sqrt(z.norm()); }
  static Rational modulus_squared(const ExactComplex& z) { return z.norm(); }
  static SqrtSum real(const Rational& r) { return SqrtSum(r); }
  static const Rational& weight(const Rational& w) { return w; }
  static SqrtSum scale(const SqrtSum& r, const Rational& w) { return r * w; }
  static SqrtSum real_sqrt(const Rational& r) { return SqrtSum::sqrt(r); }
  static double to_double(const SqrtSum& r) { return r.to_double(); }

  /// conj(z)/|z| * z, the contribution of one atom to the pairing with the
  /// extremal phase function. Written as |z|^2 * sqrt(1/|z|^2) so the
  /// representation differs from modulus().
  static SqrtSum extremal_term(const ExactComplex& z) {
    if (z.is_zero()) return SqrtSum();
    Rational n = z.norm();
    return SqrtSum::sqrt(Rational(1) / n) * n;
  }

  static bool equal(const ExactComplex& a, const ExactComplex& b, double) { return a == b; }
  static bool equal(const SqrtSum& a, const SqrtSum& b, double) { return a == b; }
  static bool less_equal(const SqrtSum& a, const SqrtSum& b, double) { return a <= b; }
  static bool less(const SqrtSum& a, const SqrtSum& b, double) { return a < b; }
};

template <>
struct ScalarTraits<FloatComplex> {
  using Real = double;
  using Squared = double;
  static constexpr bool kExact = false;
  static constexpr std::string_view kModeName = "float";

  static FloatComplex make(const Rational& re, const Rational& im = Rational(0)) {
    return {re.get_d(), im.get_d()};
  }
  static FloatComplex conj(const FloatComplex& z) { return std::conj(z); }
  static bool is_zero(const FloatComplex& z) { return z == FloatComplex(0.0, 0.0); }
  static double modulus(const FloatComplex& z) { return std::abs(z); }
  static double modulus_squared(const FloatComplex& z) { return std::norm(z); }
  static double real(const Rational& r) { return r.get_d(); }
  static double weight(const Rational& w) { return w.get_d(); }
  static double scale(double r, const Rational& w) { return r * w.get_d(); }
  static double real_sqrt(double r) { return std::sqrt(r); }
  static double to_double(double r) { return r; }

  static double extremal_term(const FloatComplex& z) {
    double m = std::abs(z);
    if (m == 0.0) return 0.0;
    return (std::conj(z) / m * z).real();
  }

  static bool equal(const FloatComplex& a, const FloatComplex& b, double tol) {
    return std::abs(a - b) <= tol;
  }
  static bool equal(double a, double b, double tol) { return std::abs(a - b) <= tol; }
  static bool less_equal(double a, double b, double tol) { return a <= b + tol; }
  static bool less(double a, double b, double tol) { return a < b - tol; }
};

template <class S>
concept Scalar = requires { typename ScalarTraits<S>::Real; };

template <Scalar S>
using RealOf = typename ScalarTraits<S>::Real;

}  // namespace cosetalg
