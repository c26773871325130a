#include "cosetalg/star_algebra.hpp"

namespace cosetalg {

GroupPtr quotient_group(const TransferContext& ctx) {
  if (!ctx.subgroup_is_normal()) {
    throw Error(ErrorCode::kNotNormal,
                ctx.subgroup().label() + " is not normal in " + ctx.group().label());
  }
  const auto& g = ctx.group();
  const auto& c = ctx.cosets();
  std::vector<std::vector<std::uint32_t>> table(c.size(), std::vector<std::uint32_t>(c.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < c.size(); ++i) {
    names.push_back(g.element_name(c.representative(i)) + "H");
    for (std::size_t j = 0; j < c.size(); ++j) {
      table[i][j] = static_cast<std::uint32_t>(
          c.coset_of(g.product(c.representative(i), c.representative(j))));
    }
  }
  return group_from_table(c.size(), table, g.label() + "/" + ctx.subgroup().label(),
                          std::move(names));
}

}  // namespace cosetalg
