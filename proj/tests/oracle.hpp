#pragma once

// Brute-force models used as test oracles. Everything here works on raw
// permutations and explicit coset sets; nothing calls the library's
// transfer, kernel or star-algebra code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "cosetalg/rational.hpp"

namespace oracle {

using cosetalg::ExactComplex;
using cosetalg::Rational;
using Perm = std::vector<std::uint32_t>;
using Vec = std::vector<ExactComplex>;

inline Perm compose(const Perm& p, const Perm& q) {
  Perm out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

inline Perm invert(const Perm& p) {
  Perm out(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

/// Every bijection of {0..n-1}, lexicographic.
inline std::vector<Perm> all_permutations(std::uint32_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Multiplication table of the permutations in the given order.
inline std::vector<std::vector<std::uint32_t>> table_of(const std::vector<Perm>& elems) {
  std::vector<std::vector<std::uint32_t>> table(elems.size(), std::vector<std::uint32_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      auto c = compose(elems[a], elems[b]);
      table[a][b] = static_cast<std::uint32_t>(std::find(elems.begin(), elems.end(), c) - elems.begin());
    }
  }
  return table;
}

/// All subgroups of a permutation group, by testing every subset containing
/// the identity (only for tiny groups).
inline std::vector<std::set<std::size_t>> all_subgroups(const std::vector<Perm>& elems) {
  auto table = table_of(elems);
  std::size_t n = elems.size();
  std::vector<std::set<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.insert(i);
    }
    if (s.empty()) continue;
    bool closed = true;
    for (auto a : s) {
      for (auto b : s) closed = closed && s.count(table[a][b]);
    }
    if (closed) out.push_back(s);
  }
  return out;
}

struct Model {
  std::vector<Perm> elems;
  std::vector<std::size_t> h;
  std::vector<std::vector<std::size_t>> cosets;  // sorted by least element
  std::vector<std::size_t> coset_id;

  Model(std::vector<Perm> e, std::vector<std::size_t> members) : elems(std::move(e)), h(std::move(members)) {
    coset_id.assign(elems.size(), SIZE_MAX);
    for (std::size_t x = 0; x < elems.size(); ++x) {
      if (coset_id[x] != SIZE_MAX) continue;
      std::vector<std::size_t> c;
      for (auto k : h) c.push_back(mul(x, k));
      std::sort(c.begin(), c.end());
      for (auto g : c) coset_id[g] = cosets.size();
      cosets.push_back(c);
    }
  }

  std::size_t index(const Perm& p) const {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  }
  std::size_t mul(std::size_t a, std::size_t b) const { return index(compose(elems[a], elems[b])); }
  std::size_t inv(std::size_t a) const { return index(invert(elems[a])); }
  std::size_t order() const { return elems.size(); }
  std::size_t index_count() const { return cosets.size(); }
  Rational h_weight() const { return Rational(1, static_cast<unsigned long>(h.size())); }
};

inline ExactComplex cx(long re, long im = 0) { return ExactComplex(Rational(re), Rational(im)); }
inline ExactComplex cq(const Rational& re, const Rational& im = Rational(0)) { return ExactComplex(re, im); }

/// psi_q(x) = psi(coset of x).
inline Vec lift(const Model& m, const Vec& psi) {
  Vec out(m.order());
  for (std::size_t x = 0; x < m.order(); ++x) out[x] = psi[m.coset_id[x]];
  return out;
}

/// Fiber average of f over each coset, taken over the whole coset.
inline Vec push_function(const Model& m, const Vec& f) {
  Vec out(m.index_count());
  for (std::size_t i = 0; i < m.index_count(); ++i) {
    for (auto g : m.cosets[i]) out[i] += f[g];
    out[i] *= m.h_weight();
  }
  return out;
}

inline Vec push_measure(const Model& m, const Vec& nu) {
  Vec out(m.index_count());
  for (std::size_t x = 0; x < m.order(); ++x) out[m.coset_id[x]] += nu[x];
  return out;
}

inline Vec lift_measure(const Model& m, const Vec& lambda) {
  Vec out(m.order());
  for (std::size_t x = 0; x < m.order(); ++x) out[x] = lambda[m.coset_id[x]] * m.h_weight();
  return out;
}

/// Sum over all pairs with x y = z, as a double loop.
inline Vec group_conv_measures(const Model& m, const Vec& a, const Vec& b) {
  Vec out(m.order());
  for (std::size_t x = 0; x < m.order(); ++x) {
    for (std::size_t y = 0; y < m.order(); ++y) out[m.mul(x, y)] += a[x] * b[y];
  }
  return out;
}

inline Vec group_conv_functions(const Model& m, const Vec& f, const Vec& g, const Rational& c) {
  Vec out(m.order());
  for (std::size_t x = 0; x < m.order(); ++x) {
    for (std::size_t y = 0; y < m.order(); ++y) out[x] += f[y] * g[m.mul(m.inv(y), x)];
    out[x] *= c;
  }
  return out;
}

inline Vec group_inv(const Model& m, const Vec& f) {
  Vec out(m.order());
  for (std::size_t x = 0; x < m.order(); ++x) out[x] = conj(f[m.inv(x)]);
  return out;
}

/// Coset measure convolution from the defining pairing, averaged over every
/// choice of representatives so no representative is privileged.
inline Vec coset_conv_measures(const Model& m, const Vec& a, const Vec& b) {
  Vec out(m.index_count());
  Rational w = m.h_weight() * m.h_weight() * m.h_weight();
  for (std::size_t i = 0; i < m.index_count(); ++i) {
    for (std::size_t j = 0; j < m.index_count(); ++j) {
      for (auto x : m.cosets[i]) {
        for (auto y : m.cosets[j]) {
          for (auto k : m.h) out[m.coset_id[m.mul(m.mul(x, k), y)]] += a[i] * b[j] * w;
        }
      }
    }
  }
  return out;
}

/// lift, invert on G, push forward.
inline Vec coset_inv_measure(const Model& m, const Vec& lambda) {
  return push_measure(m, group_inv(m, lift_measure(m, lambda)));
}

/// lift, convolve on G with weight c, push down.
inline Vec coset_conv_functions(const Model& m, const Vec& phi, const Vec& psi, const Rational& c) {
  return push_function(m, group_conv_functions(m, lift(m, phi), lift(m, psi), c));
}

inline Vec coset_inv_function(const Model& m, const Vec& phi) {
  return push_function(m, group_inv(m, lift(m, phi)));
}

}  // namespace oracle
