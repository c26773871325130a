#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "cosetalg/rational.hpp"

namespace cosetalg {

/// Dense index of an element within one FiniteGroup.
struct GroupElement {
  std::uint32_t index = 0;
  friend auto operator<=>(GroupElement, GroupElement) = default;
};

/// Images of 0..degree-1. Composition is right-to-left: (p * q)(i) = p[q[i]].
using Permutation = std::vector<std::uint32_t>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group with a materialized multiplication table. Immutable.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  GroupElement identity() const noexcept { return identity_; }
  const std::string& label() const noexcept { return label_; }

  GroupElement product(GroupElement a, GroupElement b) const {
    return GroupElement{table_[a.index * order_ + b.index]};
  }
  GroupElement inverse(GroupElement a) const { return GroupElement{inverse_[a.index]}; }

  /// The modular function; constantly 1 since finite groups are unimodular.
  Rational modular_function(GroupElement) const { return Rational(1); }

  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(order_)) |
           std::views::transform([](std::uint32_t i) { return GroupElement{i}; });
  }

  std::span<const std::uint32_t> table() const noexcept { return table_; }

  /// Non-empty only for groups built from generators.
  const std::vector<Permutation>& permutations() const noexcept { return permutations_; }
  std::optional<GroupElement> find(const Permutation& p) const;

  /// Cycle notation for permutation groups ("e", "(01)", "(012)(34)"),
  /// supplied names for table groups, "g<index>" otherwise.
  std::string element_name(GroupElement g) const;

 private:
  friend GroupPtr group_from_table(std::size_t, const std::vector<std::vector<std::uint32_t>>&,
                                   std::string, std::vector<std::string>);
  friend GroupPtr group_from_permutations(std::size_t, const std::vector<Permutation>&,
                                          std::string, std::size_t);

  FiniteGroup() = default;

  std::size_t order_ = 0;
  GroupElement identity_{};
  std::string label_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<Permutation> permutations_;
  std::vector<std::string> names_;
};

inline constexpr std::size_t kDefaultClosureBudget = 10080;

/// Validates the table (range, identity, inverses, associativity) and derives
/// identity and inverses from it. Errors name the first violation.
GroupPtr group_from_table(std::size_t order, const std::vector<std::vector<std::uint32_t>>& table,
                          std::string label, std::vector<std::string> element_names = {});

/// Closure of the generators under composition. Elements are indexed
/// breadth-first from the identity, multiplying on the right by each
/// generator in the given order.
GroupPtr group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                 std::string label,
                                 std::size_t closure_budget = kDefaultClosureBudget);

class Subgroup {
 public:
  /// Throws Error(kNotASubgroup) unless members contain the identity and are
  /// closed under product and inverse.
  Subgroup(GroupPtr parent, std::vector<GroupElement> members, std::string label);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }
  /// Sorted by index.
  std::span<const GroupElement> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(GroupElement g) const { return mask_[g.index]; }
  const std::string& label() const noexcept { return label_; }

 private:
  GroupPtr parent_;
  std::vector<GroupElement> members_;
  std::vector<bool> mask_;
  std::string label_;
};

/// Smallest subgroup containing the seed.
Subgroup subgroup_closure(const GroupPtr& group, std::span<const GroupElement> seed,
                          std::string label = "");

/// Left cosets xH of a subgroup.
class CosetSpace {
 public:
  const FiniteGroup& group() const noexcept { return subgroup_.parent(); }
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  std::size_t size() const noexcept { return cosets_.size(); }
  std::span<const GroupElement> coset(std::size_t i) const { return cosets_[i]; }
  GroupElement representative(std::size_t i) const { return representatives_[i]; }
  std::span<const GroupElement> representatives() const noexcept { return representatives_; }
  std::size_t coset_of(GroupElement g) const { return coset_of_[g.index]; }

  /// Same partition with other representatives; each reps[i] must lie in
  /// coset i.
  CosetSpace with_representatives(std::vector<GroupElement> reps) const;

 private:
  friend CosetSpace left_cosets(const GroupPtr&, const Subgroup&);
  explicit CosetSpace(Subgroup subgroup) : subgroup_(std::move(subgroup)) {}

  Subgroup subgroup_;
  std::vector<std::vector<GroupElement>> cosets_;
  std::vector<GroupElement> representatives_;
  std::vector<std::size_t> coset_of_;
};

/// Cosets ordered by least element index; the representative of each coset
/// is its least-index member.
CosetSpace left_cosets(const GroupPtr& group, const Subgroup& subgroup);

/// g h g^-1 in H for all g in G, h in H.
bool is_normal(const FiniteGroup& group, const Subgroup& subgroup);

/// Structural checks used by tests and the verifier.
bool is_associative(const FiniteGroup& group);
bool is_latin_square(const FiniteGroup& group);

}  // namespace cosetalg
