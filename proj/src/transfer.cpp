#include "cosetalg/transfer.hpp"

#include <array>

namespace cosetalg {

std::string_view to_string(FormulaVariant variant) {
  switch (variant) {
    case FormulaVariant::kFaithful: return "faithful";
    case FormulaVariant::kDropJ: return "drop-j";
    case FormulaVariant::kDropHAverage: return "drop-h-average";
    case FormulaVariant::kDropConjugation: return "drop-conjugation";
  }
  return "faithful";
}

FormulaVariant parse_formula_variant(std::string_view text) {
  for (auto v : {FormulaVariant::kFaithful, FormulaVariant::kDropJ, FormulaVariant::kDropHAverage,
                 FormulaVariant::kDropConjugation}) {
    if (to_string(v) == text) return v;
  }
  throw Error(ErrorCode::kParseError, "unknown formula variant '" + std::string(text) + "'");
}

TransferContext::TransferContext(const GroupPtr& group, const Subgroup& subgroup,
                                 Rational group_weight, FormulaVariant variant)
    : cosets_(left_cosets(group, subgroup)),
      haar_(std::move(group_weight), subgroup.order()),
      variant_(variant),
      normal_(is_normal(*group, subgroup)) {
  check_weil_on_basis();
}

void TransferContext::check_weil_on_basis() const {
  // For f = 1_{g}: sum_{xH} c|H| T_H(f)(xH) must equal c.
  const auto& g = group();
  for (auto x : g.elements()) {
    std::size_t hits = 0;
    std::size_t i = cosets_.coset_of(x);
    for (auto h : subgroup().members()) {
      if (g.product(cosets_.representative(i), h) == x) ++hits;
    }
    Rational lhs = haar_.coset_weight() * haar_.subgroup_weight() * static_cast<unsigned long>(hits);
    if (lhs != haar_.group_weight()) {
      throw Error(ErrorCode::kInconsistentContext,
                  "Weil's formula fails on the indicator of " + g.element_name(x));
    }
  }
}

TransferContext TransferContext::with_representatives(std::vector<GroupElement> reps) const {
  TransferContext out = *this;
  out.cosets_ = cosets_.with_representatives(std::move(reps));
  out.check_weil_on_basis();
  return out;
}

TransferContext TransferContext::with_variant(FormulaVariant variant) const {
  TransferContext out = *this;
  out.variant_ = variant;
  return out;
}

TransferContext TransferContext::with_group_weight(Rational weight) const {
  TransferContext out = *this;
  out.haar_ = HaarStructure(std::move(weight), subgroup().order());
  out.check_weil_on_basis();
  return out;
}

namespace {

struct TagName {
  SpaceTag tag;
  std::string_view name;
  std::string_view script;
};

constexpr std::array<TagName, 6> kTagNames{{
    {SpaceTag::kAGH, "A(G/H)", "A(G/H)"},
    {SpaceTag::kAGroup, "A(G:H)", "A(G:H)"},
    {SpaceTag::kCGroup, "C(G:H)", "C(G:H)"},
    {SpaceTag::kMGroup, "M(G:H)", "M(G:H)"},
    {SpaceTag::kMInvGroup, "MI(G:H)", "\xF0\x9D\x93\x9C(G:H)"},
    {SpaceTag::kMInvGH, "MI(G/H)", "\xF0\x9D\x93\x9C(G/H)"},
}};

}  // namespace

std::string_view to_string(SpaceTag tag) {
  for (const auto& t : kTagNames) {
    if (t.tag == tag) return t.name;
  }
  return "?";
}

SpaceTag parse_space_tag(std::string_view text) {
  for (const auto& t : kTagNames) {
    if (t.name == text || t.script == text) return t.tag;
  }
  throw Error(ErrorCode::kUnknownTag, "unknown space tag '" + std::string(text) + "'");
}

}  // namespace cosetalg
