#include "cosetalg/group.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cosetalg/error.hpp"

namespace cosetalg {

namespace {

std::string cycle_notation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  bool wide = p.size() > 10;
  std::string out;
  for (std::uint32_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    std::uint32_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first && wide) out += " ";
      out += std::to_string(i);
      first = false;
      i = p[i];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

}  // namespace

std::optional<GroupElement> FiniteGroup::find(const Permutation& p) const {
  auto it = std::find(permutations_.begin(), permutations_.end(), p);
  if (it == permutations_.end()) return std::nullopt;
  return GroupElement{static_cast<std::uint32_t>(it - permutations_.begin())};
}

std::string FiniteGroup::element_name(GroupElement g) const {
  if (!permutations_.empty()) return cycle_notation(permutations_[g.index]);
  if (!names_.empty()) return names_[g.index];
  return "g" + std::to_string(g.index);
}

GroupPtr group_from_table(std::size_t order, const std::vector<std::vector<std::uint32_t>>& table,
                          std::string label, std::vector<std::string> element_names) {
  if (order == 0) throw Error(ErrorCode::kParseError, "group order must be positive");
  if (table.size() != order) {
    throw Error(ErrorCode::kParseError, "table has " + std::to_string(table.size()) +
                                            " rows, expected " + std::to_string(order));
  }
  if (!element_names.empty() && element_names.size() != order) {
    throw Error(ErrorCode::kParseError, "element name count differs from the order");
  }
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->order_ = order;
  group->label_ = std::move(label);
  group->names_ = std::move(element_names);
  group->table_.resize(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    if (table[a].size() != order) {
      throw Error(ErrorCode::kParseError, "table row " + std::to_string(a) + " has wrong length");
    }
    for (std::size_t b = 0; b < order; ++b) {
      if (table[a][b] >= order) {
        throw Error(ErrorCode::kParseError, "table entry (" + std::to_string(a) + "," +
                                                std::to_string(b) + ") out of range");
      }
      group->table_[a * order + b] = table[a][b];
    }
  }
  const auto& t = group->table_;
  auto mul = [&](std::size_t a, std::size_t b) { return t[a * order + b]; };

  std::optional<std::uint32_t> identity;
  for (std::uint32_t e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::kNoIdentity, "no two-sided identity in the table");
  group->identity_ = GroupElement{*identity};

  group->inverse_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::optional<std::uint32_t> inv;
    for (std::uint32_t b = 0; b < order && !inv; ++b) {
      if (mul(a, b) == *identity && mul(b, a) == *identity) inv = b;
    }
    if (!inv) throw Error(ErrorCode::kNotInvertible, "element " + std::to_string(a) + " has no inverse");
    group->inverse_[a] = *inv;
  }

  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t c = 0; c < order; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorCode::kNotAssociative, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                      "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return group;
}

GroupPtr group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                 std::string label, std::size_t closure_budget) {
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    std::vector<bool> hit(degree, false);
    bool ok = g.size() == degree;
    for (std::size_t i = 0; ok && i < g.size(); ++i) {
      ok = g[i] < degree && !hit[g[i]];
      if (ok) hit[g[i]] = true;
    }
    if (!ok) {
      throw Error(ErrorCode::kNotAPermutation,
                  "generator " + std::to_string(k) + " is not a bijection of {0.." +
                      std::to_string(degree == 0 ? 0 : degree - 1) + "}");
    }
  }

  Permutation identity(degree);
  for (std::uint32_t i = 0; i < degree; ++i) identity[i] = i;

  std::vector<Permutation> elements{identity};
  std::map<Permutation, std::uint32_t> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Permutation next = compose(elements[head], s);
      if (index.contains(next)) continue;
      if (elements.size() >= closure_budget) {
        throw Error(ErrorCode::kClosureBudgetExceeded,
                    "closure exceeds " + std::to_string(closure_budget) + " elements");
      }
      index.emplace(next, static_cast<std::uint32_t>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  const std::size_t order = elements.size();
  group->order_ = order;
  group->label_ = std::move(label);
  group->identity_ = GroupElement{0};
  group->table_.resize(order * order);
  group->inverse_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      auto c = index.at(compose(elements[a], elements[b]));
      group->table_[a * order + b] = c;
      if (c == 0) group->inverse_[a] = static_cast<std::uint32_t>(b);
    }
  }
  group->permutations_ = std::move(elements);
  return group;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<GroupElement> members, std::string label)
    : parent_(std::move(parent)), members_(std::move(members)), label_(std::move(label)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(parent_->order(), false);
  for (auto g : members_) {
    if (g.index >= parent_->order()) throw Error(ErrorCode::kNotASubgroup, "member out of range");
    mask_[g.index] = true;
  }
  if (!contains(parent_->identity())) {
    throw Error(ErrorCode::kNotASubgroup, "'" + label_ + "' lacks the identity");
  }
  for (auto a : members_) {
    if (!contains(parent_->inverse(a))) {
      throw Error(ErrorCode::kNotASubgroup, "'" + label_ + "' not closed under inverse");
    }
    for (auto b : members_) {
      if (!contains(parent_->product(a, b))) {
        throw Error(ErrorCode::kNotASubgroup, "'" + label_ + "' not closed under product");
      }
    }
  }
}

Subgroup subgroup_closure(const GroupPtr& group, std::span<const GroupElement> seed,
                          std::string label) {
  std::vector<bool> in(group->order(), false);
  std::vector<GroupElement> members{group->identity()};
  in[group->identity().index] = true;
  std::deque<GroupElement> frontier{group->identity()};
  while (!frontier.empty()) {
    GroupElement g = frontier.front();
    frontier.pop_front();
    for (auto s : seed) {
      GroupElement next = group->product(g, s);
      if (in[next.index]) continue;
      in[next.index] = true;
      members.push_back(next);
      frontier.push_back(next);
    }
  }
  return Subgroup(group, std::move(members), std::move(label));
}

CosetSpace left_cosets(const GroupPtr& group, const Subgroup& subgroup) {
  if (subgroup.parent_ptr() != group &&
      (subgroup.parent().order() != group->order() ||
       !std::ranges::equal(subgroup.parent().table(), group->table()))) {
    throw Error(ErrorCode::kInconsistentContext,
                "subgroup '" + subgroup.label() + "' does not belong to " + group->label());
  }
  CosetSpace space(subgroup);
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  space.coset_of_.assign(group->order(), kUnassigned);
  for (auto x : group->elements()) {
    if (space.coset_of_[x.index] != kUnassigned) continue;
    std::size_t id = space.cosets_.size();
    std::vector<GroupElement> coset;
    for (auto h : subgroup.members()) {
      GroupElement g = group->product(x, h);
      coset.push_back(g);
      space.coset_of_[g.index] = id;
    }
    std::sort(coset.begin(), coset.end());
    space.representatives_.push_back(coset.front());
    space.cosets_.push_back(std::move(coset));
  }
  return space;
}

CosetSpace CosetSpace::with_representatives(std::vector<GroupElement> reps) const {
  if (reps.size() != cosets_.size()) {
    throw Error(ErrorCode::kInconsistentContext, "representative count differs from the index");
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (reps[i].index >= coset_of_.size() || coset_of_[reps[i].index] != i) {
      throw Error(ErrorCode::kInconsistentContext,
                  "representative " + std::to_string(reps[i].index) + " not in coset " +
                      std::to_string(i));
    }
  }
  CosetSpace out = *this;
  out.representatives_ = std::move(reps);
  return out;
}

bool is_normal(const FiniteGroup& group, const Subgroup& subgroup) {
  for (auto g : group.elements()) {
    GroupElement g_inv = group.inverse(g);
    for (auto h : subgroup.members()) {
      if (!subgroup.contains(group.product(group.product(g, h), g_inv))) return false;
    }
  }
  return true;
}

bool is_associative(const FiniteGroup& group) {
  for (auto a : group.elements()) {
    for (auto b : group.elements()) {
      GroupElement ab = group.product(a, b);
      for (auto c : group.elements()) {
        if (group.product(ab, c) != group.product(a, group.product(b, c))) return false;
      }
    }
  }
  return true;
}

bool is_latin_square(const FiniteGroup& group) {
  const std::size_t n = group.order();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), column(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      auto r = group.table()[a * n + b];
      auto c = group.table()[b * n + a];
      if (row[r] || column[c]) return false;
      row[r] = column[c] = true;
    }
  }
  return true;
}

}  // namespace cosetalg
