#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cosetalg/rational.hpp"

namespace cosetalg {

/// Exact real number of the form sum_k c_k * sqrt(r_k) with rational c_k and
/// positive rational r_k. Moduli of rational complex numbers and all norms of
/// rational-complex measures live in this set, so norm identities and norm
/// inequalities can be decided without rounding.
///
/// Equality uses the fact that square roots of squarefree integers are
/// linearly independent over Q: terms are merged whenever the ratio of their
/// radicands is a rational square, and the value is zero iff every merged
/// coefficient vanishes. Signs of nonzero values are then settled by
/// evaluating at increasing precision until the error bound excludes zero.
class SqrtSum {
 public:
  struct Term {
    Rational coefficient;
    Rational radicand;
  };

  SqrtSum() = default;
  explicit SqrtSum(const Rational& value);

  /// sqrt(r) for r >= 0.
  static SqrtSum sqrt(const Rational& r);

  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// -1, 0 or +1, decided exactly.
  int sign() const;

  /// Equal value with merged radicand classes, integer radicands and no zero
  /// coefficients. Radicand 1 (the rational part) sorts first.
  SqrtSum canonical() const;

  /// The value when it is rational.
  std::optional<Rational> as_rational() const;

  double to_double() const;

  /// "p/q" for rationals, otherwise "p/q*sqrt(m) + ..." in canonical form.
  std::string to_string() const;

  SqrtSum& operator+=(const SqrtSum& other);
  SqrtSum& operator-=(const SqrtSum& other);
  SqrtSum& operator*=(const Rational& factor);

  friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) { return a += b; }
  friend SqrtSum operator-(SqrtSum a, const SqrtSum& b) { return a -= b; }
  friend SqrtSum operator*(SqrtSum a, const Rational& b) { return a *= b; }
  friend SqrtSum operator*(const Rational& a, SqrtSum b) { return b *= a; }
  friend SqrtSum operator*(const SqrtSum& a, const SqrtSum& b);
  friend SqrtSum operator-(SqrtSum a);

  friend bool operator==(const SqrtSum& a, const SqrtSum& b) { return (a - b).sign() == 0; }
  friend std::strong_ordering operator<=>(const SqrtSum& a, const SqrtSum& b) {
    return (a - b).sign() <=> 0;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace cosetalg
