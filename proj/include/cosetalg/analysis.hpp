#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cosetalg/error.hpp"
#include "cosetalg/group.hpp"
#include "cosetalg/scalar.hpp"

namespace cosetalg {

enum class SpaceKind { kGroup, kCosets };

inline std::string_view to_string(SpaceKind kind) {
  return kind == SpaceKind::kGroup ? "G" : "G/H";
}

/// A finite index set: the elements of G or the cosets of G/H.
struct Space {
  SpaceKind kind = SpaceKind::kGroup;
  std::size_t size = 0;
  friend bool operator==(const Space&, const Space&) = default;
};

inline Space group_space(const FiniteGroup& g) { return {SpaceKind::kGroup, g.order()}; }
inline Space coset_space(const CosetSpace& c) { return {SpaceKind::kCosets, c.size()}; }

inline void require_space(const Space& actual, const Space& expected, std::string_view what) {
  if (actual != expected) {
    throw Error(ErrorCode::kSpaceMismatch,
                std::string(what) + ": expected " + std::string(to_string(expected.kind)) + "[" +
                    std::to_string(expected.size) + "], got " + std::string(to_string(actual.kind)) +
                    "[" + std::to_string(actual.size) + "]");
  }
}

/// Dense table of scalars over a Space. Function and Measure share the
/// layout but are distinct types: a measure stores atoms lambda({x}).
template <Scalar S, class Tag>
class PointValues {
 public:
  PointValues() = default;
  PointValues(Space space, std::vector<S> values) : space_(space), values_(std::move(values)) {
    if (values_.size() != space_.size) {
      throw Error(ErrorCode::kSpaceMismatch, "value count differs from the space size");
    }
  }

  static PointValues zero(Space space) { return PointValues(space, std::vector<S>(space.size)); }
  static PointValues indicator(Space space, std::size_t point) {
    PointValues out = zero(space);
    out.values_[point] = ScalarTraits<S>::make(Rational(1));
    return out;
  }

  const Space& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return values_.size(); }
  const S& operator[](std::size_t i) const { return values_[i]; }
  S& operator[](std::size_t i) { return values_[i]; }
  std::span<const S> values() const noexcept { return values_; }

  bool is_zero() const {
    return std::ranges::all_of(values_, [](const S& v) { return ScalarTraits<S>::is_zero(v); });
  }

  PointValues& operator+=(const PointValues& other) {
    require_space(other.space_, space_, "addition");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
  }
  PointValues& operator-=(const PointValues& other) {
    require_space(other.space_, space_, "subtraction");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
  }
  PointValues& operator*=(const S& factor) {
    for (auto& v : values_) v *= factor;
    return *this;
  }

  friend PointValues operator+(PointValues a, const PointValues& b) { return a += b; }
  friend PointValues operator-(PointValues a, const PointValues& b) { return a -= b; }
  friend PointValues operator*(const S& s, PointValues a) { return a *= s; }
  friend bool operator==(const PointValues& a, const PointValues& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  Space space_;
  std::vector<S> values_;
};

struct FunctionTag {};
struct MeasureTag {};

template <Scalar S>
using Function = PointValues<S, FunctionTag>;
template <Scalar S>
using Measure = PointValues<S, MeasureTag>;

/// Pointwise comparison; exact in rational mode, within `tolerance` otherwise.
template <Scalar S, class Tag>
bool approx_equal(const PointValues<S, Tag>& a, const PointValues<S, Tag>& b, double tolerance) {
  if (a.space() != b.space()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!ScalarTraits<S>::equal(a[i], b[i], tolerance)) return false;
  }
  return true;
}

/// Haar weights: sigma gives every element of G mass c, dh is the
/// probability measure on H, and Weil's formula then forces mass c|H| on
/// every coset.
class HaarStructure {
 public:
  HaarStructure(Rational group_weight, std::size_t subgroup_order)
      : group_weight_(std::move(group_weight)),
        subgroup_weight_(1, static_cast<unsigned long>(subgroup_order)),
        coset_weight_(group_weight_ * static_cast<unsigned long>(subgroup_order)) {
    if (sgn(group_weight_) <= 0) {
      throw Error(ErrorCode::kInconsistentContext, "Haar weight must be positive");
    }
    subgroup_weight_.canonicalize();
  }

  const Rational& group_weight() const noexcept { return group_weight_; }
  const Rational& subgroup_weight() const noexcept { return subgroup_weight_; }
  const Rational& coset_weight() const noexcept { return coset_weight_; }

 private:
  Rational group_weight_;
  Rational subgroup_weight_;
  Rational coset_weight_;
};

/// |lambda|(X) = sum of atom moduli.
template <Scalar S>
RealOf<S> tv_norm(const Measure<S>& lambda) {
  RealOf<S> total{};
  for (const auto& atom : lambda.values()) total += ScalarTraits<S>::modulus(atom);
  return total;
}

/// Exponent of an L^p norm: 1 <= p < infinity, or infinity.
class LpExponent {
 public:
  static LpExponent finite(double p) { return LpExponent(p); }
  static LpExponent infinity() { return LpExponent(std::numeric_limits<double>::infinity()); }

  double value() const noexcept { return p_; }
  bool is_infinite() const noexcept { return std::isinf(p_); }

 private:
  explicit LpExponent(double p) : p_(p) {
    if (!(p >= 1.0)) throw Error(ErrorCode::kUnsupportedExponent, "p must be >= 1");
  }
  double p_;
};

/// max_x |phi(x)|. Exact mode compares squared moduli.
template <Scalar S>
RealOf<S> sup_norm(const Function<S>& phi) {
  if (phi.size() == 0) return RealOf<S>{};
  std::size_t best = 0;
  auto best_sq = ScalarTraits<S>::modulus_squared(phi[0]);
  for (std::size_t i = 1; i < phi.size(); ++i) {
    auto sq = ScalarTraits<S>::modulus_squared(phi[i]);
    if (sq > best_sq) {
      best_sq = sq;
      best = i;
    }
  }
  return ScalarTraits<S>::modulus(phi[best]);
}

/// sum_x w(x) |phi(x)|^2, exact in rational mode.
template <Scalar S>
typename ScalarTraits<S>::Squared l2_norm_squared(const Function<S>& phi, std::span<const Rational> weights) {
  require_space(Space{phi.space().kind, weights.size()}, phi.space(), "l2 weights");
  typename ScalarTraits<S>::Squared total{};
  for (std::size_t i = 0; i < phi.size(); ++i) {
    total += ScalarTraits<S>::modulus_squared(phi[i]) * ScalarTraits<S>::weight(weights[i]);
  }
  return total;
}

/// (sum_x w(x) |phi(x)|^p)^(1/p), or the sup norm for p = infinity. Exact mode
/// supports p in {1, 2, infinity}; p = 2 is sqrt of the exact squared norm.
template <Scalar S>
RealOf<S> lp_norm(const Function<S>& phi, LpExponent p, std::span<const Rational> weights) {
  require_space(Space{phi.space().kind, weights.size()}, phi.space(), "lp weights");
  if (p.is_infinite()) return sup_norm(phi);
  if (p.value() == 1.0) {
    RealOf<S> total{};
    for (std::size_t i = 0; i < phi.size(); ++i) {
      total += ScalarTraits<S>::scale(ScalarTraits<S>::modulus(phi[i]), weights[i]);
    }
    return total;
  }
  if (p.value() == 2.0) return ScalarTraits<S>::real_sqrt(l2_norm_squared(phi, weights));
  if constexpr (ScalarTraits<S>::kExact) {
    throw Error(ErrorCode::kUnsupportedExponent,
                "exact mode supports p in {1, 2, inf}, got " + std::to_string(p.value()));
  } else {
    double total = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      total += weights[i].get_d() * std::pow(std::abs(phi[i]), p.value());
    }
    return std::pow(total, 1.0 / p.value());
  }
}

template <Scalar S>
RealOf<S> lp_norm(const Function<S>& phi, LpExponent p, const Rational& uniform_weight) {
  std::vector<Rational> weights(phi.size(), uniform_weight);
  return lp_norm(phi, p, std::span<const Rational>(weights));
}

/// L^1(G, sigma) and L^1(G/H, mu) norms under the given Haar structure.
template <Scalar S>
RealOf<S> l1_norm(const Function<S>& phi, const HaarStructure& haar) {
  const Rational& w =
      phi.space().kind == SpaceKind::kGroup ? haar.group_weight() : haar.coset_weight();
  RealOf<S> total{};
  for (const auto& v : phi.values()) total += ScalarTraits<S>::modulus(v);
  return ScalarTraits<S>::scale(total, w);
}

/// lambda(phi) = sum_x phi(x) lambda({x}).
template <Scalar S>
S riesz_pair(const Measure<S>& lambda, const Function<S>& phi) {
  require_space(phi.space(), lambda.space(), "riesz_pair");
  S total{};
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (ScalarTraits<S>::is_zero(lambda[i])) continue;
    total += phi[i] * lambda[i];
  }
  return total;
}

/// Operator norm of phi -> lambda(phi) on the sup-norm unit ball, attained at
/// phi(x) = conj(lambda({x})) / |lambda({x})|.
template <Scalar S>
RealOf<S> functional_norm(const Measure<S>& lambda) {
  RealOf<S> total{};
  for (const auto& atom : lambda.values()) total += ScalarTraits<S>::extremal_term(atom);
  return total;
}

/// The maximizing phase function for functional_norm, in float mode only
/// (its values are irrational in general).
inline Function<FloatComplex> extremal_phase(const Measure<FloatComplex>& lambda) {
  auto out = Function<FloatComplex>::zero(lambda.space());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    double m = std::abs(lambda[i]);
    if (m > 0.0) out[i] = std::conj(lambda[i]) / m;
  }
  return out;
}

/// (L_z phi)(x) = phi(z^-1 x) on G, (L_z phi)(xH) = phi(z^-1 xH) on G/H.
template <Scalar S>
Function<S> translate_function(const CosetSpace& cosets, GroupElement z, const Function<S>& phi) {
  const FiniteGroup& g = cosets.group();
  GroupElement z_inv = g.inverse(z);
  auto out = Function<S>::zero(phi.space());
  if (phi.space().kind == SpaceKind::kGroup) {
    require_space(phi.space(), group_space(g), "translate_function");
    for (auto x : g.elements()) out[x.index] = phi[g.product(z_inv, x).index];
  } else {
    require_space(phi.space(), coset_space(cosets), "translate_function");
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      out[i] = phi[cosets.coset_of(g.product(z_inv, cosets.representative(i)))];
    }
  }
  return out;
}

/// (R_h f)(x) = f(x h) on G.
template <Scalar S>
Function<S> right_translate_function(const FiniteGroup& g, GroupElement h, const Function<S>& f) {
  require_space(f.space(), group_space(g), "right_translate_function");
  auto out = Function<S>::zero(f.space());
  for (auto x : g.elements()) out[x.index] = f[g.product(x, h).index];
  return out;
}

/// nu_x({y}) = nu({x y}) on G, lambda_x({yH}) = lambda({x yH}) on G/H.
template <Scalar S>
Measure<S> translate_measure_left(const CosetSpace& cosets, GroupElement x, const Measure<S>& nu) {
  const FiniteGroup& g = cosets.group();
  auto out = Measure<S>::zero(nu.space());
  if (nu.space().kind == SpaceKind::kGroup) {
    require_space(nu.space(), group_space(g), "translate_measure_left");
    for (auto y : g.elements()) out[y.index] = nu[g.product(x, y).index];
  } else {
    require_space(nu.space(), coset_space(cosets), "translate_measure_left");
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      out[i] = nu[cosets.coset_of(g.product(x, cosets.representative(i)))];
    }
  }
  return out;
}

/// nu^g({y}) = nu({y g}) on G.
template <Scalar S>
Measure<S> translate_measure_right(const FiniteGroup& group, GroupElement g, const Measure<S>& nu) {
  require_space(nu.space(), group_space(group), "translate_measure_right");
  auto out = Measure<S>::zero(nu.space());
  for (auto y : group.elements()) out[y.index] = nu[group.product(y, g).index];
  return out;
}

/// sigma_f({x}) = f(x) * c.
template <Scalar S>
Measure<S> embed_function_G(const Function<S>& f, const HaarStructure& haar) {
  if (f.space().kind != SpaceKind::kGroup) {
    throw Error(ErrorCode::kSpaceMismatch, "embed_function_G expects a function on G");
  }
  const S w = ScalarTraits<S>::make(haar.group_weight());
  auto out = Measure<S>::zero(f.space());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * w;
  return out;
}

/// mu_phi({xH}) = phi(xH) * c|H|.
template <Scalar S>
Measure<S> embed_function_GH(const Function<S>& phi, const HaarStructure& haar) {
  if (phi.space().kind != SpaceKind::kCosets) {
    throw Error(ErrorCode::kSpaceMismatch, "embed_function_GH expects a function on G/H");
  }
  const S w = ScalarTraits<S>::make(haar.coset_weight());
  auto out = Measure<S>::zero(phi.space());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = phi[i] * w;
  return out;
}

/// Function with the same values as a measure's atoms (and vice versa);
/// used where a pairing is evaluated against point masses.
template <Scalar S>
Function<S> as_function(const Measure<S>& m) {
  return Function<S>(m.space(), std::vector<S>(m.values().begin(), m.values().end()));
}
template <Scalar S>
Measure<S> as_measure(const Function<S>& f) {
  return Measure<S>(f.space(), std::vector<S>(f.values().begin(), f.values().end()));
}

}  // namespace cosetalg
