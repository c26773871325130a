#include <map>
#include <sstream>

#include "cosetalg/verifier.hpp"

namespace cosetalg {

namespace {

Json meta_json(const VerifyConfig& config) {
  Json meta;
  meta["seed"] = config.seed;
  meta["trials"] = config.trials;
  meta["mode"] = std::string(to_string(config.mode));
  if (config.mode == Mode::kFloat) meta["tolerance"] = config.tolerance;
  meta["haar_weight"] = format_rational(config.group_weight);
  return meta;
}

Json result_json(const CheckResult& r) {
  Json out;
  out["id"] = std::string(to_string(r.id));
  out["group"] = r.group_label;
  out["subgroup"] = r.subgroup_label;
  out["variant"] = std::string(to_string(r.variant));
  out["status"] = std::string(to_string(r.status));
  if (!r.reason.empty()) out["reason"] = r.reason;
  out["trials"] = r.trials;
  out["seed"] = r.seed;
  out["evaluations"] = r.evaluations;
  if (r.witness) out["witness"] = *r.witness;
  if (!r.observations.empty()) out["observations"] = r.observations;
  return out;
}

struct Tally {
  std::size_t pass = 0, fail = 0, skipped = 0;
  void add(Status s) {
    if (s == Status::kPass) ++pass;
    else if (s == Status::kFail) ++fail;
    else ++skipped;
  }
};

std::string pair_heading(const CheckResult& r) {
  std::string out = r.group_label + " / " + r.subgroup_label;
  if (r.variant != FormulaVariant::kFaithful) out += " [" + std::string(to_string(r.variant)) + "]";
  return out;
}

std::string escape_cell(std::string text) {
  std::string out;
  for (char ch : text) {
    if (ch == '|') out += "\\|";
    else out += ch;
  }
  return out;
}

}  // namespace

Json report_json(const std::vector<CheckResult>& results, const VerifyConfig& config) {
  Tally tally;
  Json list = Json::array();
  for (const auto& r : results) {
    tally.add(r.status);
    list.push_back(result_json(r));
  }
  Json out;
  out["meta"] = meta_json(config);
  out["summary"] = {{"passed", tally.pass}, {"failed", tally.fail}, {"skipped", tally.skipped}};
  out["results"] = std::move(list);
  return out;
}

std::string report_markdown(const std::vector<CheckResult>& results, const VerifyConfig& config) {
  std::ostringstream md;
  Tally total;
  for (const auto& r : results) total.add(r.status);

  md << "# Verification report\n\n";
  md << "mode " << to_string(config.mode) << ", seed " << config.seed << ", trials " << config.trials
     << ", group weight " << format_rational(config.group_weight) << "\n\n";
  md << "**" << total.pass << " passed, " << total.fail << " failed, " << total.skipped << " skipped**\n\n";

  md << "## Coverage\n\n| Check | Statement | Pass | Fail | Skipped |\n|---|---|---|---|---|\n";
  std::map<CheckId, Tally> per_check;
  for (const auto& r : results) per_check[r.id].add(r.status);
  for (auto id : all_checks()) {
    const Tally& t = per_check[id];
    md << "| " << to_string(id) << " | " << escape_cell(std::string(statement(id))) << " | " << t.pass << " | "
       << t.fail << " | " << t.skipped << " |\n";
  }

  std::string current;
  for (const auto& r : results) {
    std::string heading = pair_heading(r);
    if (heading != current) {
      current = heading;
      md << "\n## " << escape_cell(heading) << "\n\n| Check | Status | Evaluations | Note |\n|---|---|---|---|\n";
    }
    std::string note = r.reason;
    if (!r.observations.empty()) {
      if (!note.empty()) note += "; ";
      note += std::to_string(r.observations.size()) + " exhibit(s)";
    }
    md << "| " << to_string(r.id) << " | " << to_string(r.status) << " | " << r.evaluations << " | "
       << escape_cell(note) << " |\n";
  }

  bool any_failure = false;
  for (const auto& r : results) {
    if (r.status != Status::kFail || !r.witness) continue;
    if (!any_failure) md << "\n## Failures\n";
    any_failure = true;
    md << "\n### " << to_string(r.id) << " on " << pair_heading(r) << ": " << r.reason << "\n\n";
    md << "```json\n" << r.witness->dump(2) << "\n```\n";
  }
  return md.str();
}

}  // namespace cosetalg
