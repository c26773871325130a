#include "cosetalg/io.hpp"

#include <fstream>
#include <sstream>

namespace cosetalg {

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint32_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    malformed(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::uint32_t>();
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  malformed("rational must be a \"p/q\" string or an integer");
}

double double_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_rational(j.get<std::string>()).get_d();
  malformed("scalar part must be a number or a \"p/q\" string");
}

}  // namespace

Json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::string message = e.what();
    auto colon = message.rfind(": ");
    if (colon != std::string::npos) message = message.substr(colon + 2);
    throw Error(ErrorCode::kParseError,
                std::string(source) + ":" + line_column(text, byte) + ": " + message);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path.string());
}

GroupPtr group_from_json(const Json& j) {
  std::string label = j.is_object() && j.contains("label") ? j["label"].get<std::string>() : "G";
  if (j.is_object() && j.contains("table")) {
    std::size_t order = as_index(field(j, "order"), "order");
    const Json& rows = j["table"];
    if (!rows.is_array()) malformed("'table' must be an array of rows");
    std::vector<std::vector<std::uint32_t>> table;
    for (const auto& row : rows) {
      if (!row.is_array()) malformed("'table' rows must be arrays");
      std::vector<std::uint32_t> r;
      for (const auto& v : row) r.push_back(as_index(v, "table entry"));
      table.push_back(std::move(r));
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
    return group_from_table(order, table, label, names);
  }
  if (j.is_object() && j.contains("generators")) {
    std::size_t degree = as_index(field(j, "degree"), "degree");
    std::vector<Permutation> gens;
    for (const auto& g : j["generators"]) {
      Permutation p;
      for (const auto& v : g) p.push_back(as_index(v, "generator entry"));
      gens.push_back(std::move(p));
    }
    return group_from_permutations(degree, gens, label);
  }
  malformed("group JSON needs 'table' or 'generators'");
}

Json group_to_json(const FiniteGroup& g) {
  Json out;
  out["label"] = g.label();
  out["order"] = g.order();
  Json table = Json::array();
  for (auto a : g.elements()) {
    Json row = Json::array();
    for (auto b : g.elements()) row.push_back(g.product(a, b).index);
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  Json names = Json::array();
  for (auto a : g.elements()) names.push_back(g.element_name(a));
  out["names"] = std::move(names);
  return out;
}

Subgroup subgroup_from_json(const GroupPtr& group, const Json& j) {
  std::vector<GroupElement> members;
  for (const auto& m : field(j, "members")) {
    auto index = as_index(m, "member");
    if (index >= group->order()) malformed("member " + std::to_string(index) + " out of range");
    members.push_back(GroupElement{index});
  }
  std::string label = j.contains("label") ? j["label"].get<std::string>() : "H";
  return Subgroup(group, std::move(members), std::move(label));
}

Json subgroup_to_json(const Subgroup& h) {
  Json out;
  out["label"] = h.label();
  Json members = Json::array();
  for (auto g : h.members()) members.push_back(g.index);
  out["members"] = std::move(members);
  return out;
}

Json scalar_to_json(const ExactComplex& z) {
  Json out;
  out["re"] = format_rational(z.real());
  out["im"] = format_rational(z.imag());
  return out;
}

Json scalar_to_json(const FloatComplex& z) {
  Json out;
  out["re"] = z.real();
  out["im"] = z.imag();
  return out;
}

template <>
ExactComplex scalar_from_json<ExactComplex>(const Json& re, const Json& im) {
  return ExactComplex(rational_from_json(re), rational_from_json(im));
}

template <>
FloatComplex scalar_from_json<FloatComplex>(const Json& re, const Json& im) {
  return {double_from_json(re), double_from_json(im)};
}

Json real_to_json(const SqrtSum& r) { return r.canonical().to_string(); }
Json real_to_json(double r) { return r; }

SpaceKind parse_space_kind(std::string_view text) {
  if (text == "G") return SpaceKind::kGroup;
  if (text == "G/H") return SpaceKind::kCosets;
  malformed("unknown space '" + std::string(text) + "'");
}

namespace detail {

template <Scalar S>
std::vector<S> entries_from_json(const Json& j, const char* key, Space expected) {
  SpaceKind kind = parse_space_kind(field(j, "space").get<std::string>());
  if (kind != expected.kind) {
    throw Error(ErrorCode::kSpaceMismatch, "operand lives on " + std::string(to_string(kind)) +
                                               ", expected " + std::string(to_string(expected.kind)));
  }
  std::vector<S> out(expected.size);
  std::vector<bool> seen(expected.size, false);
  const Json& entries = field(j, key);
  if (!entries.is_array()) malformed(std::string("'") + key + "' must be an array");
  for (const auto& e : entries) {
    auto index = as_index(field(e, "index"), "index");
    if (index >= expected.size) {
      throw Error(ErrorCode::kSpaceMismatch, "index " + std::to_string(index) + " outside " +
                                                 std::string(to_string(kind)) + "[" +
                                                 std::to_string(expected.size) + "]");
    }
    if (seen[index]) malformed("duplicate index " + std::to_string(index));
    seen[index] = true;
    Json zero = "0";
    out[index] = scalar_from_json<S>(e.contains("re") ? e["re"] : zero, e.contains("im") ? e["im"] : zero);
  }
  return out;
}

template std::vector<ExactComplex> entries_from_json<ExactComplex>(const Json&, const char*, Space);
template std::vector<FloatComplex> entries_from_json<FloatComplex>(const Json&, const char*, Space);

}  // namespace detail

}  // namespace cosetalg
