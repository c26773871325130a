#include <algorithm>
#include <array>
#include <exception>
#include <random>

#include "identity.hpp"

namespace cosetalg {

namespace {

struct CheckInfo {
  CheckId id;
  std::string_view name;
  std::string_view statement;
};

constexpr std::array<CheckInfo, 23> kChecks{{
    {CheckId::kW0, "W0", "Coset-level operations do not depend on the chosen coset representatives"},
    {CheckId::kW1, "W1", "sum_xH mu(xH) T_H f(xH) = sum_x sigma(x) f(x), and the weight on H has mass 1"},
    {CheckId::kT1, "T1", "T_H contracts sup and L1 norms on functions, and T_H(psi_q) = psi"},
    {CheckId::kT2, "T2", "lambda -> lambda_q is an isometric lift into right H-invariant measures with T_H(lambda_q) = lambda"},
    {CheckId::kT3, "T3", "T_H nu (psi) = nu(psi_q) and ||T_H nu|| <= ||nu||, strictly for some nu when H != {e}"},
    {CheckId::kT4, "T4", "T_H on measures and the lift commute with left translation"},
    {CheckId::kT5, "T5", "phi -> mu_phi is a linear isometry L1(G/H) -> M(G/H) with (mu_phi)_q = sigma_(phi_q)"},
    {CheckId::kJ1, "J1", "J is a norm-decreasing idempotent onto A(G/H); J = id iff H is normal"},
    {CheckId::kF1, "F1", "phi * psi = T_H(phi_q * psi_q) and (phi * psi)_q = phi_q * psi_q"},
    {CheckId::kF2, "F2", "Convolution on L1(G/H) is associative, left equivariant and L1-submultiplicative; A(G/H) is closed under it"},
    {CheckId::kF3, "F3", "phi** = J phi, phi* = T_H((phi_q)*), ||phi*||_1 <= ||phi||_1, with equality on A(G/H)"},
    {CheckId::kF4, "F4", "(phi * psi)* = psi* * phi* on L1(G/H)"},
    {CheckId::kM1, "M1", "Measure convolution on G/H is the bilinear associative product given by the double integral"},
    {CheckId::kM2, "M2", "||lambda * lambda'|| <= ||lambda|| ||lambda'|| and (lambda * lambda')_q = lambda_q * lambda'_q"},
    {CheckId::kM3, "M3", "mu_phi * mu_psi = mu_(phi * psi) and (mu_phi)* = mu_(phi*)"},
    {CheckId::kM4, "M4", "lambda*(psi) = conj(lambda(psi*)) for every measure lambda on G/H"},
    {CheckId::kM5, "M5", "lambda** = lambda o J, equal to lambda on left H-invariant measures"},
    {CheckId::kM6, "M6", "(lambda * lambda')* = lambda'* * lambda*, and invariant measures form a *-subalgebra"},
    {CheckId::kM7, "M7", "lambda* = T_H((lambda_q)*) and ||lambda*|| <= ||lambda||, with equality on invariant measures"},
    {CheckId::kM8, "M8", "The lift identifies M(G/H) with right H-invariant measures on G and invariant measures with bi-invariant ones"},
    {CheckId::kN1, "N1", "For normal H the coset operations are those of the quotient group G/H"},
    {CheckId::kG1, "G1", "L1(G) and M(G) are Banach *-algebras and f -> sigma_f is an isometric *-homomorphism"},
    {CheckId::kR1, "R1", "M(G/H) is the dual of C(G/H) with total variation as the dual norm"},
}};

const CheckInfo& info(CheckId id) {
  for (const auto& c : kChecks) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::kUnknownCheck, "check id out of range");
}

}  // namespace

std::span<const CheckId> all_checks() {
  static const auto ids = [] {
    std::array<CheckId, kChecks.size()> out{};
    for (std::size_t i = 0; i < kChecks.size(); ++i) out[i] = kChecks[i].id;
    return out;
  }();
  return ids;
}

std::string_view to_string(CheckId id) { return info(id).name; }

CheckId parse_check_id(std::string_view text) {
  for (const auto& c : kChecks) {
    if (c.name == text) return c.id;
  }
  throw Error(ErrorCode::kUnknownCheck, "unknown check '" + std::string(text) + "'");
}

std::string_view statement(CheckId id) { return info(id).statement; }

std::vector<std::string> identity_names(CheckId id) {
  std::vector<std::string> out;
  for (const auto& identity : verify::registry()) {
    if (identity.check == id) out.push_back(identity.name);
  }
  return out;
}

std::string_view to_string(Mode mode) { return mode == Mode::kExact ? "exact" : "float"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::kExact;
  if (text == "float") return Mode::kFloat;
  throw Error(ErrorCode::kParseError, "mode must be exact or float, got '" + std::string(text) + "'");
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "?";
}

namespace verify {

namespace {

// Basis tuples beyond this count are sampled instead of enumerated. Every
// catalog identity stays below it; only large user-supplied groups hit it.
constexpr std::size_t kBasisCap = 1 << 16;

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t identity_seed(std::uint64_t seed, const TransferContext& ctx, const Identity& id) {
  return splitmix64(seed ^ fnv1a64(ctx.group().label() + "|" + ctx.subgroup().label() + "|" + id.name));
}

using Values = std::vector<ExactComplex>;
using Tuple = std::vector<Values>;

std::string_view to_string(OperandKind kind) {
  switch (kind) {
    case OperandKind::kFunctionG: return "function on G";
    case OperandKind::kFunctionGH: return "function on G/H";
    case OperandKind::kMeasureG: return "measure on G";
    case OperandKind::kMeasureGH: return "measure on G/H";
    case OperandKind::kInvariantMeasureGH: return "invariant measure on G/H";
    case OperandKind::kLeftInvariantG: return "left H-invariant measure on G";
    case OperandKind::kRightInvariantG: return "right H-invariant measure on G";
    case OperandKind::kInvariantFunctionGH: return "function in A(G/H)";
  }
  return "?";
}

/// Maps raw values into the operand's subspace, always with the faithful
/// operators so mutants never shape their own inputs.
Values project(OperandKind kind, const TransferContext& faithful, Values raw) {
  Space space = space_of(kind, faithful);
  auto values = [](const auto& v) { return Values(v.values().begin(), v.values().end()); };
  switch (kind) {
    case OperandKind::kInvariantMeasureGH:
      return values(project_invariant(faithful, Measure<ExactComplex>(space, std::move(raw))));
    case OperandKind::kLeftInvariantG:
      return values(left_average(faithful, Measure<ExactComplex>(space, std::move(raw))));
    case OperandKind::kRightInvariantG:
      return values(right_average(faithful, Measure<ExactComplex>(space, std::move(raw))));
    case OperandKind::kInvariantFunctionGH:
      return values(j_function(faithful, Function<ExactComplex>(space, std::move(raw))));
    default:
      return raw;
  }
}

Values indicator(std::size_t n, std::size_t i) {
  Values v(n);
  v[i] = ExactComplex(1);
  return v;
}

std::vector<Values> basis(OperandKind kind, const TransferContext& faithful) {
  std::size_t n = space_of(kind, faithful).size;
  std::vector<Values> out;
  for (std::size_t i = 0; i < n; ++i) {
    Values v = project(kind, faithful, indicator(n, i));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

Values random_values(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  Values out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational re(a, b), im(c, d);
    re.canonicalize();
    im.canonicalize();
    out.emplace_back(re, im);
  }
  return out;
}

Tuple random_tuple(const Identity& id, const TransferContext& faithful, std::mt19937_64& rng) {
  Tuple t;
  for (auto kind : id.operands) {
    t.push_back(project(kind, faithful, random_values(rng, space_of(kind, faithful).size)));
  }
  return t;
}

template <Scalar S>
std::vector<std::vector<S>> convert(const Tuple& t) {
  if constexpr (std::is_same_v<S, ExactComplex>) {
    return t;
  } else {
    std::vector<std::vector<S>> out;
    for (const auto& v : t) {
      std::vector<S> w;
      w.reserve(v.size());
      for (const auto& z : v) w.emplace_back(z.real().get_d(), z.imag().get_d());
      out.push_back(std::move(w));
    }
    return out;
  }
}

Verdict evaluate(const Identity& id, const TransferContext& ctx, const Tuple& t, const Json& params,
                 Mode mode, double tolerance) {
  if (mode == Mode::kExact) {
    auto ops = convert<ExactComplex>(t);
    return id.exact(Env<ExactComplex>{ctx, ops, params, 0.0});
  }
  auto ops = convert<FloatComplex>(t);
  return id.approx(Env<FloatComplex>{ctx, ops, params, tolerance});
}

Json operand_json(OperandKind kind, const TransferContext& ctx, const Values& v) {
  Space space = space_of(kind, ctx);
  Json body = is_measure(kind) ? to_json(Measure<ExactComplex>(space, v)) : to_json(Function<ExactComplex>(space, v));
  Json out;
  out["kind"] = std::string(to_string(kind));
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

Json make_record(std::string_view kind, const Identity& id, const TransferContext& ctx, Mode mode,
                 double tolerance, const Tuple& t, const Json& params, const Verdict& v) {
  Json out;
  out["kind"] = std::string(kind);
  out["identity"] = id.name;
  out["check"] = std::string(to_string(id.check));
  out["variant"] = std::string(to_string(ctx.variant()));
  out["mode"] = std::string(to_string(mode));
  if (mode == Mode::kFloat) out["tolerance"] = tolerance;
  out["haar_weight"] = format_rational(ctx.haar().group_weight());
  out["group"] = group_to_json(ctx.group());
  out["subgroup"] = subgroup_to_json(ctx.subgroup());
  Json ops = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) ops.push_back(operand_json(id.operands[i], ctx, t[i]));
  out["operands"] = std::move(ops);
  out["params"] = params;
  out["lhs"] = v.lhs;
  out["rhs"] = v.rhs;
  out["detail"] = v.detail;
  return out;
}

struct IdentityRun {
  bool ok = true;
  std::optional<Json> witness;
  std::optional<Json> exhibit;
  std::size_t evaluations = 0;
};

/// Calls visit(tuple) on basis tuples (all of them, or a seeded sample when
/// there are more than kBasisCap) until it returns false.
template <class Visit>
bool for_basis_tuples(const Identity& id, const TransferContext& faithful, std::mt19937_64& rng, Visit visit) {
  std::vector<std::vector<Values>> bases;
  std::size_t total = 1;
  for (auto kind : id.operands) {
    bases.push_back(basis(kind, faithful));
    total *= bases.back().size();
  }
  auto build = [&](const std::vector<std::size_t>& idx) {
    Tuple t;
    for (std::size_t k = 0; k < idx.size(); ++k) t.push_back(bases[k][idx[k]]);
    return t;
  };
  std::vector<std::size_t> idx(bases.size(), 0);
  if (total <= kBasisCap) {
    for (std::size_t n = 0; n < total; ++n) {
      if (!visit(build(idx))) return false;
      for (std::size_t k = idx.size(); k-- > 0;) {
        if (++idx[k] < bases[k].size()) break;
        idx[k] = 0;
      }
    }
    return true;
  }
  for (std::size_t n = 0; n < kBasisCap; ++n) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      idx[k] = std::uniform_int_distribution<std::size_t>(0, bases[k].size() - 1)(rng);
    }
    if (!visit(build(idx))) return false;
  }
  return true;
}

IdentityRun run_forall(const Identity& id, const TransferContext& ctx, const TransferContext& faithful,
                       const VerifyConfig& config, const Json& params, std::mt19937_64& rng) {
  IdentityRun run;
  auto visit = [&](const Tuple& t) {
    ++run.evaluations;
    Verdict v = evaluate(id, ctx, t, params, config.mode, config.tolerance);
    if (v.holds) return true;
    run.ok = false;
    run.witness = make_record("counterexample", id, ctx, config.mode, config.tolerance, t, params, v);
    return false;
  };
  if (id.operands.empty()) {
    visit(Tuple{});
    return run;
  }
  if (!for_basis_tuples(id, faithful, rng, visit)) return run;
  std::size_t trials = std::max(config.trials, id.min_random);
  for (std::size_t i = 0; i < trials; ++i) {
    if (!visit(random_tuple(id, faithful, rng))) break;
  }
  return run;
}

/// Searches basis elements, then differences of two basis elements, then
/// random inputs for one where the identity's phenomenon shows up.
IdentityRun run_exists(const Identity& id, const TransferContext& ctx, const TransferContext& faithful,
                       const VerifyConfig& config, const Json& params, std::mt19937_64& rng) {
  IdentityRun run;
  Tuple last;
  Verdict last_verdict;
  auto visit = [&](const Tuple& t) {
    ++run.evaluations;
    Verdict v = evaluate(id, ctx, t, params, config.mode, config.tolerance);
    if (v.holds) {
      run.exhibit = make_record("exhibit", id, ctx, config.mode, config.tolerance, t, params, v);
      return false;
    }
    last = t;
    last_verdict = std::move(v);
    return true;
  };
  bool searching = for_basis_tuples(id, faithful, rng, visit);
  if (searching && id.operands.size() == 1) {
    auto kind = id.operands[0];
    std::size_t n = space_of(kind, faithful).size;
    for (std::size_t i = 0; searching && i < n; ++i) {
      for (std::size_t j = i + 1; searching && j < n; ++j) {
        Values diff = indicator(n, i);
        diff[j] = ExactComplex(-1);
        searching = visit(Tuple{project(kind, faithful, std::move(diff))});
      }
    }
  }
  std::size_t trials = std::max(config.trials, id.min_random);
  for (std::size_t i = 0; searching && i < trials; ++i) searching = visit(random_tuple(id, faithful, rng));
  if (searching) {
    run.ok = false;
    last_verdict.detail["searched"] = run.evaluations;
    run.witness = make_record("counterexample", id, ctx, config.mode, config.tolerance, last, params, last_verdict);
  }
  return run;
}

IdentityRun run_identity(const Identity& id, const TransferContext& ctx, const VerifyConfig& config) {
  TransferContext faithful = ctx.with_variant(FormulaVariant::kFaithful);
  std::uint64_t seed = identity_seed(config.seed, ctx, id);
  std::mt19937_64 rng(seed);
  Json params = id.make_params ? id.make_params(ctx, splitmix64(seed)) : Json::object();
  return id.quantifier == Quantifier::kForAll ? run_forall(id, ctx, faithful, config, params, rng)
                                               : run_exists(id, ctx, faithful, config, params, rng);
}

}  // namespace

}  // namespace verify

CheckResult run_check(CheckId id, const TransferContext& ctx, const VerifyConfig& config) {
  info(id);
  CheckResult result;
  result.id = id;
  result.group_label = ctx.group().label();
  result.subgroup_label = ctx.subgroup().label();
  result.variant = ctx.variant();
  result.trials = config.trials;
  result.seed = config.seed;

  std::string skip_reason;
  bool any = false;
  for (const auto& identity : verify::registry()) {
    if (identity.check != id) continue;
    if (!verify::applicable(identity, ctx)) {
      if (skip_reason.empty()) skip_reason = verify::scope_reason(identity.scope);
      continue;
    }
    any = true;
    auto run = verify::run_identity(identity, ctx, config);
    result.evaluations += run.evaluations;
    if (run.exhibit) result.observations.push_back(std::move(*run.exhibit));
    if (!run.ok) {
      result.status = Status::kFail;
      result.reason = identity.name;
      result.witness = std::move(run.witness);
      return result;
    }
  }
  if (!any) {
    result.status = Status::kSkipped;
    result.reason = skip_reason;
  }
  return result;
}

std::vector<CheckResult> run_suite(const std::vector<GroupPair>& pairs, const VerifyConfig& config) {
  std::vector<TransferContext> contexts;
  contexts.reserve(pairs.size());
  for (const auto& p : pairs) contexts.emplace_back(p.group, p.subgroup, config.group_weight);

  auto checks = all_checks();
  const std::size_t tasks = contexts.size() * checks.size();
  std::vector<CheckResult> results(tasks);
  std::vector<std::exception_ptr> errors(tasks);
  const long n = static_cast<long>(tasks);
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < n; ++t) {
    std::size_t i = static_cast<std::size_t>(t);
    try {
      results[i] = run_check(checks[i % checks.size()], contexts[i / checks.size()], config);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<CheckResult> mutant_suite(const TransferContext& ctx, const VerifyConfig& config) {
  if (ctx.subgroup_is_normal()) {
    throw Error(ErrorCode::kNormalSubgroupUseless,
                "mutants coincide with the faithful formulas when H is normal in G");
  }
  std::vector<CheckResult> out;
  for (auto variant : {FormulaVariant::kDropJ, FormulaVariant::kDropHAverage, FormulaVariant::kDropConjugation}) {
    TransferContext mutant = ctx.with_variant(variant);
    for (auto id : all_checks()) out.push_back(run_check(id, mutant, config));
  }
  return out;
}

ReplayOutcome replay_witness(const Json& witness) {
  try {
    const auto& id = verify::find_identity(witness.at("identity").get<std::string>());
    GroupPtr group = group_from_json(witness.at("group"));
    Subgroup subgroup = subgroup_from_json(group, witness.at("subgroup"));
    Rational weight = parse_rational(witness.at("haar_weight").get<std::string>());
    FormulaVariant variant = parse_formula_variant(witness.at("variant").get<std::string>());
    TransferContext ctx(group, subgroup, weight, variant);
    Mode mode = parse_mode(witness.at("mode").get<std::string>());
    double tolerance = witness.contains("tolerance") ? witness["tolerance"].get<double>() : 0.0;

    const auto& ops = witness.at("operands");
    if (ops.size() != id.operands.size()) {
      throw Error(ErrorCode::kParseError, "identity " + id.name + " takes " +
                                              std::to_string(id.operands.size()) + " operands");
    }
    verify::Tuple t;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      Space space = verify::space_of(id.operands[i], ctx);
      if (verify::is_measure(id.operands[i])) {
        auto m = measure_from_json<ExactComplex>(ops[i], space);
        t.emplace_back(m.values().begin(), m.values().end());
      } else {
        auto f = function_from_json<ExactComplex>(ops[i], space);
        t.emplace_back(f.values().begin(), f.values().end());
      }
    }
    Json params = witness.contains("params") ? witness["params"] : Json::object();
    verify::Verdict v = verify::evaluate(id, ctx, t, params, mode, tolerance);

    ReplayOutcome out;
    out.identity = id.name;
    out.kind = witness.at("kind").get<std::string>();
    out.holds = v.holds;
    out.reproduced = out.kind == "exhibit" ? v.holds : !v.holds;
    out.lhs = std::move(v.lhs);
    out.rhs = std::move(v.rhs);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed witness: ") + e.what());
  }
}

}  // namespace cosetalg
