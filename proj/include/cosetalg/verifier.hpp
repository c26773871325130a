#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cosetalg/catalog.hpp"
#include "cosetalg/io.hpp"
#include "cosetalg/transfer.hpp"

namespace cosetalg {

enum class CheckId {
  kW0, kW1, kT1, kT2, kT3, kT4, kT5, kJ1, kF1, kF2, kF3, kF4,
  kM1, kM2, kM3, kM4, kM5, kM6, kM7, kM8, kN1, kG1, kR1,
};

/// All checks in report order.
std::span<const CheckId> all_checks();
std::string_view to_string(CheckId id);
/// Throws Error(kUnknownCheck).
CheckId parse_check_id(std::string_view text);
/// One-line mathematical statement of what the check establishes.
std::string_view statement(CheckId id);
/// Names of the individual identities evaluated by a check.
std::vector<std::string> identity_names(CheckId id);

enum class Mode { kExact, kFloat };
std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

struct VerifyConfig {
  std::size_t trials = 25;
  std::uint64_t seed = 0;
  Mode mode = Mode::kExact;
  double tolerance = 1e-9;  // float mode only
  Rational group_weight = Rational(1);
};

enum class Status { kPass, kFail, kSkipped };
std::string_view to_string(Status status);

struct CheckResult {
  CheckId id = CheckId::kW0;
  std::string group_label;
  std::string subgroup_label;
  FormulaVariant variant = FormulaVariant::kFaithful;
  Status status = Status::kPass;
  /// Skip reason, or the name of the first failing identity.
  std::string reason;
  /// Present iff status is kFail; replayable with replay_witness.
  std::optional<Json> witness;
  /// Exhibits found by existence checks (non-normal witnesses), replayable.
  std::vector<Json> observations;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t evaluations = 0;
};

/// Evaluates every identity of the check on the indicator basis and on
/// `config.trials` seeded random inputs. Throws Error(kUnknownCheck) for ids
/// outside the registry.
CheckResult run_check(CheckId id, const TransferContext& ctx, const VerifyConfig& config);

/// Every check on every pair, ordered by (pair, id). Deterministic for a
/// given config regardless of thread count.
std::vector<CheckResult> run_suite(const std::vector<GroupPair>& pairs, const VerifyConfig& config);

/// Runs all checks under each broken formula variant. Throws
/// Error(kNormalSubgroupUseless) when H is normal, since the variants then
/// coincide with the faithful formulas.
std::vector<CheckResult> mutant_suite(const TransferContext& ctx, const VerifyConfig& config);

struct ReplayOutcome {
  std::string identity;
  std::string kind;  // "counterexample" or "exhibit"
  bool holds = false;
  bool reproduced = false;
  Json lhs;
  Json rhs;
};

/// Re-evaluates the single identity recorded in a witness or exhibit.
ReplayOutcome replay_witness(const Json& witness);

Json report_json(const std::vector<CheckResult>& results, const VerifyConfig& config);
std::string report_markdown(const std::vector<CheckResult>& results, const VerifyConfig& config);

}  // namespace cosetalg
