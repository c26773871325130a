#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <type_traits>

#include <json.hpp>

#include "cosetalg/analysis.hpp"
#include "cosetalg/error.hpp"
#include "cosetalg/group.hpp"

namespace cosetalg {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become Error(kParseError) carrying
/// "<source>:<line>:<column>".
Json parse_json_text(std::string_view text, std::string_view source);
Json read_json_file(const std::filesystem::path& path);

/// {"label", "order", "table"} or {"label", "degree", "generators"}, plus an
/// optional "names" list for table groups.
GroupPtr group_from_json(const Json& j);
/// Table form with element names, so indices survive a round trip.
Json group_to_json(const FiniteGroup& g);

/// {"members": [int], "label"?}.
Subgroup subgroup_from_json(const GroupPtr& group, const Json& j);
Json subgroup_to_json(const Subgroup& h);

/// Scalars are {"re", "im"}: "p/q" strings in exact mode, numbers in float
/// mode. Either form is accepted on input.
Json scalar_to_json(const ExactComplex& z);
Json scalar_to_json(const FloatComplex& z);
template <Scalar S>
S scalar_from_json(const Json& re, const Json& im);
template <>
ExactComplex scalar_from_json<ExactComplex>(const Json& re, const Json& im);
template <>
FloatComplex scalar_from_json<FloatComplex>(const Json& re, const Json& im);

Json real_to_json(const SqrtSum& r);
Json real_to_json(double r);

/// {"space": "G"|"G/H", "atoms"|"values": [{"index", "re", "im"}]}; only
/// nonzero entries are written.
template <Scalar S, class Tag>
Json to_json(const PointValues<S, Tag>& v) {
  constexpr bool kMeasure = std::is_same_v<Tag, MeasureTag>;
  Json entries = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (ScalarTraits<S>::is_zero(v[i])) continue;
    Json e = scalar_to_json(v[i]);
    Json entry;
    entry["index"] = i;
    entry["re"] = e["re"];
    entry["im"] = e["im"];
    entries.push_back(std::move(entry));
  }
  Json out;
  out["space"] = std::string(to_string(v.space().kind));
  out[kMeasure ? "atoms" : "values"] = std::move(entries);
  return out;
}

namespace detail {
template <Scalar S>
std::vector<S> entries_from_json(const Json& j, const char* key, Space expected);
}

/// Throws kSpaceMismatch when "space" or an index does not fit `expected`,
/// kParseError on malformed content.
template <Scalar S>
Function<S> function_from_json(const Json& j, Space expected) {
  return Function<S>(expected, detail::entries_from_json<S>(j, "values", expected));
}
template <Scalar S>
Measure<S> measure_from_json(const Json& j, Space expected) {
  return Measure<S>(expected, detail::entries_from_json<S>(j, "atoms", expected));
}

SpaceKind parse_space_kind(std::string_view text);

}  // namespace cosetalg
