#pragma once

// Convolution and involution kernels. The `kernels` namespace holds the
// production versions: gather form, one independent sum per output point,
// parallelized over output points with OpenMP. Each output is summed in a
// fixed order, so results do not depend on the thread count. The
// `reference` namespace holds serial scatter-form transcriptions of the same
// sums; tests and the benchmark compare the two.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cosetalg/analysis.hpp"
#include "cosetalg/group.hpp"

namespace cosetalg {

namespace detail {

template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const auto count = static_cast<std::ptrdiff_t>(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

struct KernelEntry {
  std::size_t left;
  std::size_t right;
  unsigned long count;
};

/// For each target coset z, the pairs (x, y) and #{h in averaging :
/// coset_of(r_x h r_y) = z}, listed in (x, y) order.
inline std::vector<std::vector<KernelEntry>> coset_product_kernel(
    const CosetSpace& c, std::span<const GroupElement> averaging) {
  const auto& g = c.group();
  const std::size_t n = c.size();
  std::vector<std::vector<KernelEntry>> by_target(n);
  std::vector<unsigned long> counts(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (auto h : averaging) {
        ++counts[c.coset_of(g.product(g.product(c.representative(x), h), c.representative(y)))];
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (counts[z] != 0) by_target[z].push_back({x, y, counts[z]});
      }
    }
  }
  return by_target;
}

/// For each target z, the sources x and #{h in H : coset_of(h^-1 r_x^-1) = z}.
inline std::vector<std::vector<std::pair<std::size_t, unsigned long>>> coset_inverse_kernel(
    const CosetSpace& c) {
  const auto& g = c.group();
  const std::size_t n = c.size();
  std::vector<std::vector<std::pair<std::size_t, unsigned long>>> by_target(n);
  std::vector<unsigned long> counts(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    GroupElement x_inv = g.inverse(c.representative(x));
    for (auto h : c.subgroup().members()) ++counts[c.coset_of(g.product(g.inverse(h), x_inv))];
    for (std::size_t z = 0; z < n; ++z) {
      if (counts[z] != 0) by_target[z].emplace_back(x, counts[z]);
    }
  }
  return by_target;
}

template <Scalar S>
S count_scalar(unsigned long count) {
  return ScalarTraits<S>::make(Rational(count));
}

}  // namespace detail

namespace kernels {

/// (a * b)({z}) = sum_x a({x}) b({x^-1 z}).
template <Scalar S>
Measure<S> group_measure_convolution(const FiniteGroup& g, const Measure<S>& a,
                                     const Measure<S>& b) {
  auto out = Measure<S>::zero(a.space());
  detail::parallel_for(g.order(), [&](std::size_t z) {
    S sum{};
    for (auto x : g.elements()) {
      if (ScalarTraits<S>::is_zero(a[x.index])) continue;
      sum += a[x.index] * b[g.product(g.inverse(x), GroupElement{static_cast<std::uint32_t>(z)}).index];
    }
    out[z] = std::move(sum);
  });
  return out;
}

/// (f * k)(x) = w sum_y f(y) k(y^-1 x).
template <Scalar S>
Function<S> group_function_convolution(const FiniteGroup& g, const Function<S>& f,
                                       const Function<S>& k, const S& weight) {
  auto out = Function<S>::zero(f.space());
  detail::parallel_for(g.order(), [&](std::size_t x) {
    S sum{};
    for (auto y : g.elements()) {
      if (ScalarTraits<S>::is_zero(f[y.index])) continue;
      sum += f[y.index] * k[g.product(g.inverse(y), GroupElement{static_cast<std::uint32_t>(x)}).index];
    }
    out[x] = sum * weight;
  });
  return out;
}

/// (a * b)({zH}) = sum_{xH, yH} a(xH) b(yH) (1/|A|) #{h in A : x h y H = zH},
/// with A the averaging set (H for the faithful formula).
template <Scalar S>
Measure<S> coset_measure_convolution(const CosetSpace& c, std::span<const GroupElement> averaging,
                                     const Measure<S>& a, const Measure<S>& b) {
  const auto kernel = detail::coset_product_kernel(c, averaging);
  Rational inv_size(1, static_cast<unsigned long>(averaging.size()));
  inv_size.canonicalize();
  const S weight = ScalarTraits<S>::make(inv_size);
  auto out = Measure<S>::zero(a.space());
  detail::parallel_for(c.size(), [&](std::size_t z) {
    S sum{};
    for (const auto& e : kernel[z]) {
      if (ScalarTraits<S>::is_zero(a[e.left]) || ScalarTraits<S>::is_zero(b[e.right])) continue;
      sum += a[e.left] * b[e.right] * detail::count_scalar<S>(e.count);
    }
    out[z] = sum * weight;
  });
  return out;
}

/// (phi * psi)(xH) = w sum_{yH} phi(yH) (J psi)(y^-1 xH); the caller passes
/// J psi.
template <Scalar S>
Function<S> coset_function_convolution(const CosetSpace& c, const Function<S>& phi,
                                       const Function<S>& j_psi, const S& weight) {
  const auto& g = c.group();
  auto out = Function<S>::zero(phi.space());
  detail::parallel_for(c.size(), [&](std::size_t x) {
    S sum{};
    for (std::size_t y = 0; y < c.size(); ++y) {
      if (ScalarTraits<S>::is_zero(phi[y])) continue;
      auto target = g.product(g.inverse(c.representative(y)), c.representative(x));
      sum += phi[y] * j_psi[c.coset_of(target)];
    }
    out[x] = sum * weight;
  });
  return out;
}

/// lambda*({zH}) = sum_{xH} conj(lambda(xH)) (1/|H|) #{h : h^-1 x^-1 H = zH}.
template <Scalar S>
Measure<S> coset_measure_involution(const CosetSpace& c, const Measure<S>& a, bool conjugate) {
  const auto kernel = detail::coset_inverse_kernel(c);
  Rational inv_size(1, static_cast<unsigned long>(c.subgroup().order()));
  inv_size.canonicalize();
  const S weight = ScalarTraits<S>::make(inv_size);
  auto out = Measure<S>::zero(a.space());
  detail::parallel_for(c.size(), [&](std::size_t z) {
    S sum{};
    for (const auto& [x, count] : kernel[z]) {
      if (ScalarTraits<S>::is_zero(a[x])) continue;
      S atom = conjugate ? ScalarTraits<S>::conj(a[x]) : a[x];
      sum += atom * detail::count_scalar<S>(count);
    }
    out[z] = sum * weight;
  });
  return out;
}

}  // namespace kernels

namespace reference {

template <Scalar S>
Measure<S> group_measure_convolution(const FiniteGroup& g, const Measure<S>& a,
                                     const Measure<S>& b) {
  auto out = Measure<S>::zero(a.space());
  for (auto x : g.elements()) {
    for (auto y : g.elements()) out[g.product(x, y).index] += a[x.index] * b[y.index];
  }
  return out;
}

template <Scalar S>
Function<S> group_function_convolution(const FiniteGroup& g, const Function<S>& f,
                                       const Function<S>& k, const S& weight) {
  auto out = Function<S>::zero(f.space());
  for (auto y : g.elements()) {
    for (auto w : g.elements()) out[g.product(y, w).index] += weight * f[y.index] * k[w.index];
  }
  return out;
}

template <Scalar S>
Measure<S> coset_measure_convolution(const CosetSpace& c, std::span<const GroupElement> averaging,
                                     const Measure<S>& a, const Measure<S>& b) {
  const auto& g = c.group();
  Rational inv_size(1, static_cast<unsigned long>(averaging.size()));
  inv_size.canonicalize();
  const S weight = ScalarTraits<S>::make(inv_size);
  auto out = Measure<S>::zero(a.space());
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t y = 0; y < c.size(); ++y) {
      for (auto h : averaging) {
        auto z = c.coset_of(g.product(g.product(c.representative(x), h), c.representative(y)));
        out[z] += weight * a[x] * b[y];
      }
    }
  }
  return out;
}

/// Scatter form: for fixed y, xH -> y^-1 xH is a bijection with inverse
/// uH -> y uH.
template <Scalar S>
Function<S> coset_function_convolution(const CosetSpace& c, const Function<S>& phi,
                                       const Function<S>& j_psi, const S& weight) {
  const auto& g = c.group();
  auto out = Function<S>::zero(phi.space());
  for (std::size_t y = 0; y < c.size(); ++y) {
    for (std::size_t u = 0; u < c.size(); ++u) {
      auto x = c.coset_of(g.product(c.representative(y), c.representative(u)));
      out[x] += weight * phi[y] * j_psi[u];
    }
  }
  return out;
}

template <Scalar S>
Measure<S> coset_measure_involution(const CosetSpace& c, const Measure<S>& a, bool conjugate) {
  const auto& g = c.group();
  Rational inv_size(1, static_cast<unsigned long>(c.subgroup().order()));
  inv_size.canonicalize();
  const S weight = ScalarTraits<S>::make(inv_size);
  auto out = Measure<S>::zero(a.space());
  for (std::size_t x = 0; x < c.size(); ++x) {
    S atom = conjugate ? ScalarTraits<S>::conj(a[x]) : a[x];
    for (auto h : c.subgroup().members()) {
      auto z = c.coset_of(g.product(g.inverse(h), g.inverse(c.representative(x))));
      out[z] += weight * atom;
    }
  }
  return out;
}

}  // namespace reference

}  // namespace cosetalg
