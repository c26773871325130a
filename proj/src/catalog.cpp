#include "cosetalg/catalog.hpp"

#include <array>

#include "cosetalg/error.hpp"

namespace cosetalg {

namespace {

Subgroup generated(const GroupPtr& group, std::vector<Permutation> seeds, std::string label) {
  std::vector<GroupElement> elements;
  for (const auto& p : seeds) {
    auto g = group->find(p);
    if (!g) throw std::logic_error("catalog seed not in " + group->label());
    elements.push_back(*g);
  }
  return subgroup_closure(group, elements, std::move(label));
}

Subgroup trivial(const GroupPtr& group) { return subgroup_closure(group, {}, "{e}"); }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  auto c2 = group_from_permutations(2, {{1, 0}}, "C2");
  out.push_back({c2, {trivial(c2)}});

  auto c6 = group_from_permutations(6, {{1, 2, 3, 4, 5, 0}}, "C6");
  out.push_back({c6,
                 {generated(c6, {{3, 4, 5, 0, 1, 2}}, "C2"),
                  generated(c6, {{2, 3, 4, 5, 0, 1}}, "C3")}});

  auto s3 = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, "S3");
  out.push_back({s3,
                 {trivial(s3), generated(s3, {{1, 0, 2}}, "<(01)>"),
                  generated(s3, {{1, 2, 0}}, "A3"),
                  generated(s3, {{1, 0, 2}, {1, 2, 0}}, "S3")}});

  // Symmetries of a square with vertices 0..3; s reflects across the 0-2 diagonal.
  auto d4 = group_from_permutations(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}, "D4");
  out.push_back({d4,
                 {generated(d4, {{2, 3, 0, 1}}, "Z(D4)"), generated(d4, {{1, 2, 3, 0}}, "<r>"),
                  generated(d4, {{0, 3, 2, 1}}, "<s>")}});

  auto q8 = quaternion_group();
  out.push_back({q8,
                 {subgroup_closure(q8, std::array{GroupElement{1}}, "<-1>"),
                  subgroup_closure(q8, std::array{GroupElement{2}}, "<i>")}});

  auto a4 = group_from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
  out.push_back({a4,
                 {generated(a4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, "V4"),
                  generated(a4, {{1, 2, 0, 3}}, "C3")}});

  auto s4 = group_from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, "S4");
  out.push_back({s4,
                 {generated(s4, {{1, 0, 2, 3}, {1, 2, 0, 3}}, "S3"),
                  generated(s4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, "V4"),
                  generated(s4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4")}});
  return out;
}

}  // namespace

GroupPtr quaternion_group() {
  // Unit k encodes sign (k & 1) and basis k / 2 in {1, i, j, k}.
  // basis_product[a][b] = (sign, basis) of a*b.
  static constexpr int kBasis[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<std::vector<std::uint32_t>> table(8, std::vector<std::uint32_t>(8));
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      const auto& p = kBasis[a / 2][b / 2];
      std::uint32_t sign = (a & 1) ^ (b & 1) ^ static_cast<std::uint32_t>(p[0]);
      table[a][b] = static_cast<std::uint32_t>(p[1]) * 2 + sign;
    }
  }
  return group_from_table(8, table, "Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::vector<GroupPair> catalog_pairs() {
  std::vector<GroupPair> out;
  for (const auto& entry : catalog()) {
    for (const auto& h : entry.subgroups) out.push_back({entry.group, h});
  }
  return out;
}

const CatalogEntry* find_catalog_group(std::string_view label) {
  for (const auto& entry : catalog()) {
    if (entry.group->label() == label) return &entry;
  }
  return nullptr;
}

std::optional<GroupPair> find_catalog_pair(std::string_view group, std::string_view subgroup) {
  const CatalogEntry* entry = find_catalog_group(group);
  if (!entry) return std::nullopt;
  for (const auto& h : entry->subgroups) {
    if (h.label() == subgroup) return GroupPair{entry->group, h};
  }
  return std::nullopt;
}

}  // namespace cosetalg
