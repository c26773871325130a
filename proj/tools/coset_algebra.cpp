#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cosetalg/catalog.hpp"
#include "cosetalg/io.hpp"
#include "cosetalg/star_algebra.hpp"
#include "cosetalg/verifier.hpp"

namespace fs = std::filesystem;
using namespace cosetalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string mode;
  double tolerance = 1e-9;
  std::string haar_weight = "1";
  std::string output;
};

struct Selection {
  std::string group;
  std::string subgroup;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--mode", c.mode, "exact or float (default: $COSET_ALGEBRA_MODE, else exact)")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--tolerance", c.tolerance, "comparison tolerance in float mode")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--haar-weight", c.haar_weight, "point mass of the Haar measure on G, as p/q");
  cmd->add_option("-o,--output", c.output, "write the result here instead of stdout");
}

Mode resolve_mode(const Common& c) {
  if (!c.mode.empty()) return parse_mode(c.mode);
  if (const char* env = std::getenv("COSET_ALGEBRA_MODE"); env && *env) return parse_mode(env);
  return Mode::kExact;
}

Rational resolve_weight(const Common& c) {
  Rational w = parse_rational(c.haar_weight);
  if (sgn(w) <= 0) throw Error(ErrorCode::kParseError, "--haar-weight must be positive");
  return w;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + c.output);
  out << text;
}

bool looks_like_file(const std::string& s) { return s.ends_with(".json") || fs::exists(s); }

/// Resolves --group/--subgroup against the catalog or JSON files. An empty
/// subgroup selects every catalog subgroup of the group.
std::vector<GroupPair> resolve_pairs(const Selection& sel) {
  if (sel.group.empty()) throw Error(ErrorCode::kUnknownSelection, "--group is required");
  GroupPtr group;
  const CatalogEntry* entry = find_catalog_group(sel.group);
  if (entry) {
    group = entry->group;
  } else if (looks_like_file(sel.group)) {
    group = group_from_json(read_json_file(sel.group));
  } else {
    throw Error(ErrorCode::kUnknownSelection, "no catalog group '" + sel.group + "'");
  }

  if (sel.subgroup.empty()) {
    if (!entry) throw Error(ErrorCode::kUnknownSelection, "--subgroup is required for a group read from a file");
    std::vector<GroupPair> out;
    for (const auto& h : entry->subgroups) out.push_back({group, h});
    return out;
  }
  if (entry) {
    for (const auto& h : entry->subgroups) {
      if (h.label() == sel.subgroup) return {{group, h}};
    }
  }
  if (looks_like_file(sel.subgroup)) return {{group, subgroup_from_json(group, read_json_file(sel.subgroup))}};
  throw Error(ErrorCode::kUnknownSelection,
              "no subgroup '" + sel.subgroup + "' of " + group->label() + " in the catalog");
}

int cmd_catalog() {
  for (const auto& pair : catalog_pairs()) {
    const auto& g = *pair.group;
    const auto& h = pair.subgroup;
    std::cout << g.label() << " / " << h.label() << " index " << g.order() / h.order() << " "
              << (is_normal(g, h) ? "normal" : "non-normal") << " (|G|=" << g.order() << ", |H|=" << h.order()
              << ")\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  Common common;
  Selection sel;
  bool all = false;
  bool mutants = false;
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  std::size_t trials = 25;
  std::string format = "json";
};

int cmd_verify(const VerifyArgs& a) {
  VerifyConfig config;
  config.seed = a.seed;
  config.trials = a.trials;
  config.mode = resolve_mode(a.common);
  config.tolerance = a.common.tolerance;
  config.group_weight = resolve_weight(a.common);

  std::vector<GroupPair> pairs = a.all ? catalog_pairs() : resolve_pairs(a.sel);
  std::vector<CheckId> ids;
  for (const auto& c : a.checks) ids.push_back(parse_check_id(c));

  std::vector<CheckResult> results;
  if (a.mutants) {
    for (const auto& p : pairs) {
      TransferContext ctx(p.group, p.subgroup, config.group_weight);
      // Several pairs: the normal ones are vacuous, so skip them rather than fail.
      if (pairs.size() > 1 && ctx.subgroup_is_normal()) continue;
      auto r = mutant_suite(ctx, config);
      results.insert(results.end(), r.begin(), r.end());
    }
  } else {
    results = run_suite(pairs, config);
  }
  if (!ids.empty()) {
    std::erase_if(results, [&](const CheckResult& r) { return std::find(ids.begin(), ids.end(), r.id) == ids.end(); });
  }

  emit(a.common, a.format == "markdown" ? report_markdown(results, config) : report_json(results, config).dump(2) + "\n");
  for (const auto& r : results) {
    if (r.status == Status::kFail) return kExitCheckFailure;
  }
  return kExitOk;
}

struct ComputeArgs {
  Common common;
  Selection sel;
  std::string op;
  std::vector<std::string> files;
};

template <Scalar S>
struct Operand {
  Json raw;
  Space space;
  bool measure;

  Function<S> function() const { return function_from_json<S>(raw, space); }
  Measure<S> as_measure() const { return measure_from_json<S>(raw, space); }
};

template <Scalar S>
Operand<S> load_operand(const std::string& path, const TransferContext& ctx) {
  Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("space")) throw Error(ErrorCode::kParseError, path + ": missing \"space\"");
  SpaceKind kind = parse_space_kind(j["space"].get<std::string>());
  bool measure = j.contains("atoms");
  if (!measure && !j.contains("values")) {
    throw Error(ErrorCode::kParseError, path + ": expected \"atoms\" (measure) or \"values\" (function)");
  }
  return {std::move(j), kind == SpaceKind::kGroup ? ctx.group_space() : ctx.coset_space(), measure};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kSpaceMismatch, what);
}

template <Scalar S>
Json compute(const ComputeArgs& a, const TransferContext& ctx) {
  const std::string& op = a.op;
  std::size_t arity = (op == "conv-g" || op == "conv-gh") ? 2 : 1;
  if (a.files.size() != arity) {
    throw CLI::ValidationError(op + " takes " + std::to_string(arity) + " operand file(s)");
  }
  std::vector<Operand<S>> ops;
  for (const auto& f : a.files) ops.push_back(load_operand<S>(f, ctx));
  const auto& x = ops[0];
  bool on_g = x.space.kind == SpaceKind::kGroup;

  if (op == "th") {
    require(on_g, "th takes an operand on G");
    return x.measure ? to_json(th_measure(ctx, x.as_measure())) : to_json(th_function(ctx, x.function()));
  }
  if (op == "lift") {
    require(!on_g, "lift takes an operand on G/H");
    return x.measure ? to_json(lift_measure(ctx, x.as_measure())) : to_json(lift_function(ctx, x.function()));
  }
  if (op == "j") {
    require(!on_g && !x.measure, "j takes a function on G/H");
    return to_json(j_function(ctx, x.function()));
  }
  if (op == "conv-g" || op == "conv-gh") {
    const auto& y = ops[1];
    bool want_g = op == "conv-g";
    require(on_g == want_g && (y.space.kind == SpaceKind::kGroup) == want_g,
            op + " takes two operands on " + (want_g ? "G" : "G/H"));
    require(x.measure == y.measure, op + " takes two functions or two measures");
    if (want_g) {
      return x.measure ? to_json(conv_g_measures(ctx.group(), x.as_measure(), y.as_measure()))
                       : to_json(conv_g_functions(ctx.group(), ctx.haar(), x.function(), y.function()));
    }
    return x.measure ? to_json(conv_coset_measures(ctx, x.as_measure(), y.as_measure()))
                     : to_json(conv_coset_functions(ctx, x.function(), y.function()));
  }
  if (op == "inv-g") {
    require(on_g, "inv-g takes an operand on G");
    return x.measure ? to_json(inv_g_measure(ctx.group(), x.as_measure())) : to_json(inv_g_function(ctx.group(), x.function()));
  }
  if (op == "inv-gh") {
    require(!on_g, "inv-gh takes an operand on G/H");
    return x.measure ? to_json(inv_coset_measure(ctx, x.as_measure())) : to_json(inv_coset_function(ctx, x.function()));
  }
  if (op == "tv") {
    require(x.measure, "tv takes a measure");
    Json out;
    out["tv_norm"] = real_to_json(tv_norm(x.as_measure()));
    return out;
  }
  // embed
  require(!x.measure, "embed takes a function");
  return on_g ? to_json(embed_function_G(x.function(), ctx.haar())) : to_json(embed_function_GH(x.function(), ctx.haar()));
}

int cmd_compute(const ComputeArgs& a) {
  if (a.sel.group.empty() || a.sel.subgroup.empty()) {
    throw CLI::ValidationError("compute needs --group and --subgroup to fix the coset space");
  }
  auto pairs = resolve_pairs(a.sel);
  TransferContext ctx(pairs[0].group, pairs[0].subgroup, resolve_weight(a.common));
  Json out = resolve_mode(a.common) == Mode::kExact ? compute<ExactComplex>(a, ctx) : compute<FloatComplex>(a, ctx);
  emit(a.common, out.dump(2) + "\n");
  return kExitOk;
}

/// Accepts a single witness or exhibit, or a whole report; every record found
/// is re-evaluated.
int cmd_replay(const std::string& path, const Common& common) {
  Json j = read_json_file(path);
  std::vector<Json> records;
  if (j.contains("results")) {
    for (const auto& r : j["results"]) {
      if (r.contains("witness")) records.push_back(r["witness"]);
      if (r.contains("observations")) {
        for (const auto& o : r["observations"]) records.push_back(o);
      }
    }
  } else {
    records.push_back(j);
  }
  bool all = true;
  Json out = Json::array();
  for (const auto& rec : records) {
    ReplayOutcome r = replay_witness(rec);
    all = all && r.reproduced;
    Json line;
    line["identity"] = r.identity;
    line["kind"] = r.kind;
    line["holds"] = r.holds;
    line["reproduced"] = r.reproduced;
    line["lhs"] = r.lhs;
    line["rhs"] = r.rhs;
    out.push_back(std::move(line));
  }
  emit(common, out.dump(2) + "\n");
  return all ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coset convolution algebras on finite groups: computations and identity checks"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in (G, H) pairs");

  VerifyArgs v;
  auto* verify_cmd = app.add_subcommand("verify", "check the algebraic identities on (G, H) pairs");
  add_common(verify_cmd, v.common);
  verify_cmd->add_flag("--all", v.all, "every catalog pair");
  verify_cmd->add_option("--group", v.sel.group, "catalog label or group JSON file");
  verify_cmd->add_option("--subgroup", v.sel.subgroup, "catalog label or subgroup JSON file");
  verify_cmd->add_flag("--mutants", v.mutants, "run every check under each broken formula variant");
  verify_cmd->add_option("--check", v.checks, "restrict the report to these check ids");
  verify_cmd->add_option("--seed", v.seed, "random seed");
  verify_cmd->add_option("--trials", v.trials, "random trials per identity")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", v.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));

  ComputeArgs c;
  auto* compute_cmd = app.add_subcommand("compute", "apply one operation to JSON operands");
  add_common(compute_cmd, c.common);
  compute_cmd->add_option("operation", c.op, "th, lift, j, conv-g, conv-gh, inv-g, inv-gh, tv, embed")
      ->required()
      ->check(CLI::IsMember({"th", "lift", "j", "conv-g", "conv-gh", "inv-g", "inv-gh", "tv", "embed"}));
  compute_cmd->add_option("files", c.files, "operand JSON files")->required();
  compute_cmd->add_option("--group", c.sel.group, "catalog label or group JSON file");
  compute_cmd->add_option("--subgroup", c.sel.subgroup, "catalog label or subgroup JSON file");

  std::string replay_path;
  Common replay_common;
  auto* replay_cmd = app.add_subcommand("replay", "re-evaluate witnesses from a witness or report file");
  replay_cmd->add_option("file", replay_path, "witness or report JSON")->required();
  replay_cmd->add_option("-o,--output", replay_common.output, "write the outcome here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (catalog_cmd->parsed()) return cmd_catalog();
    if (verify_cmd->parsed()) {
      if (!v.all && v.sel.group.empty()) throw CLI::ValidationError("verify needs --all or --group");
      if (v.all && !v.sel.group.empty()) throw CLI::ValidationError("--all and --group are exclusive");
      return cmd_verify(v);
    }
    if (compute_cmd->parsed()) return cmd_compute(c);
    if (replay_cmd->parsed()) return cmd_replay(replay_path, replay_common);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
