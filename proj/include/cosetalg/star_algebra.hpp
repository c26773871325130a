#pragma once

#include <vector>

#include "cosetalg/analysis.hpp"
#include "cosetalg/error.hpp"
#include "cosetalg/kernels.hpp"
#include "cosetalg/transfer.hpp"

namespace cosetalg {

// G-level structures on L^1(G, sigma) and M(G).

/// (f * g)(x) = c sum_y f(y) g(y^-1 x).
template <Scalar S>
Function<S> conv_g_functions(const FiniteGroup& group, const HaarStructure& haar,
                             const Function<S>& f, const Function<S>& g) {
  require_space(f.space(), group_space(group), "conv_g_functions");
  require_space(g.space(), group_space(group), "conv_g_functions");
  return kernels::group_function_convolution(group, f, g,
                                             ScalarTraits<S>::make(haar.group_weight()));
}

/// f*(x) = Delta(x^-1) conj(f(x^-1)).
template <Scalar S>
Function<S> inv_g_function(const FiniteGroup& group, const Function<S>& f) {
  require_space(f.space(), group_space(group), "inv_g_function");
  auto out = Function<S>::zero(f.space());
  for (auto x : group.elements()) {
    auto x_inv = group.inverse(x);
    out[x.index] = ScalarTraits<S>::conj(f[x_inv.index]) *
                   ScalarTraits<S>::make(group.modular_function(x_inv));
  }
  return out;
}

template <Scalar S>
Measure<S> conv_g_measures(const FiniteGroup& group, const Measure<S>& a, const Measure<S>& b) {
  require_space(a.space(), group_space(group), "conv_g_measures");
  require_space(b.space(), group_space(group), "conv_g_measures");
  return kernels::group_measure_convolution(group, a, b);
}

/// nu*({z}) = conj(nu({z^-1})).
template <Scalar S>
Measure<S> inv_g_measure(const FiniteGroup& group, const Measure<S>& nu) {
  require_space(nu.space(), group_space(group), "inv_g_measure");
  auto out = Measure<S>::zero(nu.space());
  for (auto z : group.elements()) out[z.index] = ScalarTraits<S>::conj(nu[group.inverse(z).index]);
  return out;
}

// Coset-level structures on L^1(G/H, mu) and M(G/H).

template <Scalar S>
Function<S> conv_coset_functions(const TransferContext& ctx, const Function<S>& phi,
                                 const Function<S>& psi) {
  require_space(phi.space(), ctx.coset_space(), "conv_coset_functions");
  require_space(psi.space(), ctx.coset_space(), "conv_coset_functions");
  return kernels::coset_function_convolution(ctx.cosets(), phi, j_function(ctx, psi),
                                             ScalarTraits<S>::make(ctx.haar().coset_weight()));
}

/// phi*(xH) = Delta(x^-1) (1/|H|) sum_h conj(phi(h^-1 x^-1 H)).
template <Scalar S>
Function<S> inv_coset_function(const TransferContext& ctx, const Function<S>& phi) {
  require_space(phi.space(), ctx.coset_space(), "inv_coset_function");
  const auto& g = ctx.group();
  const auto& c = ctx.cosets();
  const S weight = ScalarTraits<S>::make(ctx.haar().subgroup_weight());
  auto out = Function<S>::zero(phi.space());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto x_inv = g.inverse(c.representative(i));
    S sum{};
    for (auto h : ctx.subgroup().members()) {
      sum += ScalarTraits<S>::conj(phi[c.coset_of(g.product(g.inverse(h), x_inv))]);
    }
    out[i] = sum * weight * ScalarTraits<S>::make(g.modular_function(x_inv));
  }
  return out;
}

template <Scalar S>
Measure<S> conv_coset_measures(const TransferContext& ctx, const Measure<S>& a,
                               const Measure<S>& b) {
  require_space(a.space(), ctx.coset_space(), "conv_coset_measures");
  require_space(b.space(), ctx.coset_space(), "conv_coset_measures");
  if (ctx.variant() == FormulaVariant::kDropHAverage) {
    const GroupElement e = ctx.group().identity();
    return kernels::coset_measure_convolution(ctx.cosets(), std::span<const GroupElement>(&e, 1),
                                              a, b);
  }
  return kernels::coset_measure_convolution(ctx.cosets(), ctx.subgroup().members(), a, b);
}

template <Scalar S>
Measure<S> inv_coset_measure(const TransferContext& ctx, const Measure<S>& lambda) {
  require_space(lambda.space(), ctx.coset_space(), "inv_coset_measure");
  return kernels::coset_measure_involution(ctx.cosets(), lambda,
                                           ctx.variant() != FormulaVariant::kDropConjugation);
}

/// mu_phi * mu_phi' = mu_{phi * phi'} and (mu_phi)* = mu_{phi*}.
template <Scalar S>
bool compatibility_mu(const TransferContext& ctx, const Function<S>& phi, const Function<S>& phi2,
                      double tolerance = 1e-9) {
  const auto& haar = ctx.haar();
  auto mu = [&](const Function<S>& f) { return embed_function_GH(f, haar); };
  bool conv = approx_equal(conv_coset_measures(ctx, mu(phi), mu(phi2)),
                           mu(conv_coset_functions(ctx, phi, phi2)), tolerance);
  bool inv = approx_equal(inv_coset_measure(ctx, mu(phi)), mu(inv_coset_function(ctx, phi)),
                          tolerance);
  return conv && inv;
}

/// G/H as a group on the coset indices (H normal). Throws Error(kNotNormal).
GroupPtr quotient_group(const TransferContext& ctx);

/// The measure lambda * lambda' computed by group convolution in the
/// quotient group.
template <Scalar S>
Measure<S> quotient_group_oracle(const TransferContext& ctx, const Measure<S>& a,
                                 const Measure<S>& b) {
  require_space(a.space(), ctx.coset_space(), "quotient_group_oracle");
  require_space(b.space(), ctx.coset_space(), "quotient_group_oracle");
  auto q = quotient_group(ctx);
  auto on_q = [&](const Measure<S>& m) {
    return Measure<S>(group_space(*q), std::vector<S>(m.values().begin(), m.values().end()));
  };
  auto r = conv_g_measures(*q, on_q(a), on_q(b));
  return Measure<S>(ctx.coset_space(), std::vector<S>(r.values().begin(), r.values().end()));
}

}  // namespace cosetalg
