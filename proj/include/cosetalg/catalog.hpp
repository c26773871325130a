#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cosetalg/group.hpp"

namespace cosetalg {

struct CatalogEntry {
  GroupPtr group;
  std::vector<Subgroup> subgroups;
};

struct GroupPair {
  GroupPtr group;
  Subgroup subgroup;
};

/// Fixed list of small groups with chosen subgroups: C2, C6, S3, D4, Q8, A4,
/// S4. Construction is deterministic, so element indices are stable.
const std::vector<CatalogEntry>& catalog();

/// Every (G, H) of the catalog in catalog order.
std::vector<GroupPair> catalog_pairs();

const CatalogEntry* find_catalog_group(std::string_view label);
std::optional<GroupPair> find_catalog_pair(std::string_view group, std::string_view subgroup);

/// Q8 as a table group on 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion_group();

}  // namespace cosetalg
