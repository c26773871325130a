#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cosetalg/analysis.hpp"
#include "cosetalg/group.hpp"

namespace cosetalg {

/// Which formulas the coset-level operators use. Everything except
/// kFaithful deliberately breaks one ingredient and exists to show the
/// verifier notices: kDropJ replaces J by the identity, kDropHAverage
/// evaluates the measure convolution kernel at h = e only, and
/// kDropConjugation removes the conjugation from the measure involution.
enum class FormulaVariant { kFaithful, kDropJ, kDropHAverage, kDropConjugation };

std::string_view to_string(FormulaVariant variant);
FormulaVariant parse_formula_variant(std::string_view text);

/// G, H, the coset space and the Haar weights, validated together.
class TransferContext {
 public:
  TransferContext(const GroupPtr& group, const Subgroup& subgroup,
                  Rational group_weight = Rational(1),
                  FormulaVariant variant = FormulaVariant::kFaithful);

  const FiniteGroup& group() const noexcept { return cosets_.group(); }
  const GroupPtr& group_ptr() const noexcept { return cosets_.subgroup().parent_ptr(); }
  const Subgroup& subgroup() const noexcept { return cosets_.subgroup(); }
  const CosetSpace& cosets() const noexcept { return cosets_; }
  const HaarStructure& haar() const noexcept { return haar_; }
  FormulaVariant variant() const noexcept { return variant_; }
  bool subgroup_is_normal() const noexcept { return normal_; }

  Space group_space() const { return cosetalg::group_space(group()); }
  Space coset_space() const { return cosetalg::coset_space(cosets_); }

  TransferContext with_representatives(std::vector<GroupElement> reps) const;
  TransferContext with_variant(FormulaVariant variant) const;
  TransferContext with_group_weight(Rational weight) const;

 private:
  void check_weil_on_basis() const;

  CosetSpace cosets_;
  HaarStructure haar_;
  FormulaVariant variant_;
  bool normal_;
};

/// T_H(f)(xH) = (1/|H|) sum_h f(x h), evaluated at the stored representative.
template <Scalar S>
Function<S> th_function(const TransferContext& ctx, const Function<S>& f) {
  require_space(f.space(), ctx.group_space(), "th_function");
  const auto& g = ctx.group();
  const auto& c = ctx.cosets();
  const S weight = ScalarTraits<S>::make(ctx.haar().subgroup_weight());
  auto out = Function<S>::zero(ctx.coset_space());
  for (std::size_t i = 0; i < c.size(); ++i) {
    S sum{};
    for (auto h : ctx.subgroup().members()) sum += f[g.product(c.representative(i), h).index];
    out[i] = sum * weight;
  }
  return out;
}

/// psi_q(x) = psi(xH).
template <Scalar S>
Function<S> lift_function(const TransferContext& ctx, const Function<S>& psi) {
  require_space(psi.space(), ctx.coset_space(), "lift_function");
  auto out = Function<S>::zero(ctx.group_space());
  for (auto x : ctx.group().elements()) out[x.index] = psi[ctx.cosets().coset_of(x)];
  return out;
}

/// Push-forward along q: T_H(nu)({xH}) = sum_{g in xH} nu({g}).
template <Scalar S>
Measure<S> th_measure(const TransferContext& ctx, const Measure<S>& nu) {
  require_space(nu.space(), ctx.group_space(), "th_measure");
  auto out = Measure<S>::zero(ctx.coset_space());
  for (auto x : ctx.group().elements()) out[ctx.cosets().coset_of(x)] += nu[x.index];
  return out;
}

/// lambda_q({g}) = lambda({gH}) / |H|, the measure representing
/// f -> lambda(T_H f).
template <Scalar S>
Measure<S> lift_measure(const TransferContext& ctx, const Measure<S>& lambda) {
  require_space(lambda.space(), ctx.coset_space(), "lift_measure");
  const S weight = ScalarTraits<S>::make(ctx.haar().subgroup_weight());
  auto out = Measure<S>::zero(ctx.group_space());
  for (auto x : ctx.group().elements()) out[x.index] = lambda[ctx.cosets().coset_of(x)] * weight;
  return out;
}

/// J psi(xH) = (1/|H|) sum_h psi(h xH).
template <Scalar S>
Function<S> j_function(const TransferContext& ctx, const Function<S>& psi) {
  require_space(psi.space(), ctx.coset_space(), "j_function");
  if (ctx.variant() == FormulaVariant::kDropJ) return psi;
  const auto& g = ctx.group();
  const auto& c = ctx.cosets();
  const S weight = ScalarTraits<S>::make(ctx.haar().subgroup_weight());
  auto out = Function<S>::zero(psi.space());
  for (std::size_t i = 0; i < c.size(); ++i) {
    S sum{};
    for (auto h : ctx.subgroup().members()) {
      sum += psi[c.coset_of(g.product(h, c.representative(i)))];
    }
    out[i] = sum * weight;
  }
  return out;
}

/// The measure of the functional psi -> lambda(J psi); atoms are
/// lambda(J 1_{zH}).
template <Scalar S>
Measure<S> compose_with_j(const TransferContext& ctx, const Measure<S>& lambda) {
  require_space(lambda.space(), ctx.coset_space(), "compose_with_j");
  auto out = Measure<S>::zero(lambda.space());
  for (std::size_t z = 0; z < lambda.size(); ++z) {
    out[z] = riesz_pair(lambda, j_function(ctx, Function<S>::indicator(lambda.space(), z)));
  }
  return out;
}

/// (1/|H|) sum_h lambda_h: the H-orbit average, landing in the left
/// H-invariant measures on G/H.
template <Scalar S>
Measure<S> project_invariant(const TransferContext& ctx, const Measure<S>& lambda) {
  require_space(lambda.space(), ctx.coset_space(), "project_invariant");
  const S weight = ScalarTraits<S>::make(ctx.haar().subgroup_weight());
  auto out = Measure<S>::zero(lambda.space());
  for (auto h : ctx.subgroup().members()) out += translate_measure_left(ctx.cosets(), h, lambda);
  return out *= weight;
}

/// (1/|H|) sum_h nu_h on G, an element of the left-invariant measures.
template <Scalar S>
Measure<S> left_average(const TransferContext& ctx, const Measure<S>& nu) {
  require_space(nu.space(), ctx.group_space(), "left_average");
  const S weight = ScalarTraits<S>::make(ctx.haar().subgroup_weight());
  auto out = Measure<S>::zero(nu.space());
  for (auto h : ctx.subgroup().members()) out += translate_measure_left(ctx.cosets(), h, nu);
  return out *= weight;
}

/// (1/|H|) sum_h nu^h on G, an element of the right-invariant measures.
template <Scalar S>
Measure<S> right_average(const TransferContext& ctx, const Measure<S>& nu) {
  require_space(nu.space(), ctx.group_space(), "right_average");
  const S weight = ScalarTraits<S>::make(ctx.haar().subgroup_weight());
  auto out = Measure<S>::zero(nu.space());
  for (auto h : ctx.subgroup().members()) out += translate_measure_right(ctx.group(), h, nu);
  return out *= weight;
}

/// Invariant subspaces:
///   A(G/H)  functions on G/H with L_h phi = phi
///   A(G:H)  functions on G with L_h f = f
///   C(G:H)  functions on G with R_h f = f
///   M(G:H)  measures on G with nu^h = nu
///   MI(G:H) measures on G with nu_h = nu
///   MI(G/H) measures on G/H with lambda_h = lambda
enum class SpaceTag { kAGH, kAGroup, kCGroup, kMGroup, kMInvGroup, kMInvGH };

std::string_view to_string(SpaceTag tag);
/// Accepts the names above ("A(G/H)", "MI(G/H)", ...); the script form
/// "𝓜(G/H)" is accepted as well. Throws Error(kUnknownTag).
SpaceTag parse_space_tag(std::string_view text);

template <Scalar S>
bool membership(const TransferContext& ctx, const Function<S>& phi, SpaceTag tag,
                double tolerance = 1e-9) {
  const auto& g = ctx.group();
  switch (tag) {
    case SpaceTag::kAGH:
      require_space(phi.space(), ctx.coset_space(), "membership A(G/H)");
      for (auto h : ctx.subgroup().members()) {
        if (!approx_equal(translate_function(ctx.cosets(), h, phi), phi, tolerance)) return false;
      }
      return true;
    case SpaceTag::kAGroup:
      require_space(phi.space(), ctx.group_space(), "membership A(G:H)");
      for (auto h : ctx.subgroup().members()) {
        if (!approx_equal(translate_function(ctx.cosets(), h, phi), phi, tolerance)) return false;
      }
      return true;
    case SpaceTag::kCGroup:
      require_space(phi.space(), ctx.group_space(), "membership C(G:H)");
      for (auto h : ctx.subgroup().members()) {
        if (right_translate_function(g, h, phi) != phi) return false;
      }
      return true;
    default:
      throw Error(ErrorCode::kSpaceMismatch,
                  std::string(to_string(tag)) + " is a space of measures, got a function");
  }
}

/// For MI(G/H) both the translation invariance and lambda o J = lambda must
/// hold.
template <Scalar S>
bool membership(const TransferContext& ctx, const Measure<S>& nu, SpaceTag tag,
                double tolerance = 1e-9) {
  const auto& g = ctx.group();
  switch (tag) {
    case SpaceTag::kMGroup:
      require_space(nu.space(), ctx.group_space(), "membership M(G:H)");
      for (auto h : ctx.subgroup().members()) {
        if (!approx_equal(translate_measure_right(g, h, nu), nu, tolerance)) return false;
      }
      return true;
    case SpaceTag::kMInvGroup:
      require_space(nu.space(), ctx.group_space(), "membership MI(G:H)");
      for (auto h : ctx.subgroup().members()) {
        if (!approx_equal(translate_measure_left(ctx.cosets(), h, nu), nu, tolerance)) return false;
      }
      return true;
    case SpaceTag::kMInvGH: {
      require_space(nu.space(), ctx.coset_space(), "membership MI(G/H)");
      bool invariant = true;
      for (auto h : ctx.subgroup().members()) {
        if (!approx_equal(translate_measure_left(ctx.cosets(), h, nu), nu, tolerance)) invariant = false;
      }
      return invariant && approx_equal(compose_with_j(ctx, nu), nu, tolerance);
    }
    default:
      throw Error(ErrorCode::kSpaceMismatch,
                  std::string(to_string(tag)) + " is a space of functions, got a measure");
  }
}

}  // namespace cosetalg
