#pragma once

// Internal: the identity registry behind the verifier checks.

#include <functional>
#include <string>
#include <vector>

#include "cosetalg/io.hpp"
#include "cosetalg/star_algebra.hpp"
#include "cosetalg/verifier.hpp"

namespace cosetalg::verify {

/// What an operand is drawn from. The invariant kinds are produced by
/// projecting indicators or random data with the faithful operators.
enum class OperandKind {
  kFunctionG,
  kFunctionGH,
  kMeasureG,
  kMeasureGH,
  kInvariantMeasureGH,   // project_invariant
  kLeftInvariantG,       // left_average
  kRightInvariantG,      // right_average
  kInvariantFunctionGH,  // J
};

bool is_measure(OperandKind kind);
Space space_of(OperandKind kind, const TransferContext& ctx);

enum class Scope { kAlways, kNormalOnly, kNonNormalOnly, kNontrivialSubgroup };
enum class Quantifier { kForAll, kExists };

/// Outcome of one evaluation. For kExists identities `holds` means the
/// sought phenomenon was exhibited.
struct Verdict {
  bool holds = true;
  Json lhs;
  Json rhs;
  Json detail;
};

template <Scalar S>
struct Env {
  using Scalar = S;
  const TransferContext& ctx;
  const std::vector<std::vector<S>>& ops;
  const Json& params;
  double tol;

  const FiniteGroup& g() const { return ctx.group(); }
  const CosetSpace& c() const { return ctx.cosets(); }
  const HaarStructure& haar() const { return ctx.haar(); }

  Function<S> fg(std::size_t i) const { return Function<S>(ctx.group_space(), ops[i]); }
  Function<S> fq(std::size_t i) const { return Function<S>(ctx.coset_space(), ops[i]); }
  Measure<S> mg(std::size_t i) const { return Measure<S>(ctx.group_space(), ops[i]); }
  Measure<S> mq(std::size_t i) const { return Measure<S>(ctx.coset_space(), ops[i]); }

  S scalar(long re, long im = 0) const { return ScalarTraits<S>::make(Rational(re), Rational(im)); }
  S scalar(const Rational& re) const { return ScalarTraits<S>::make(re); }
};

template <Scalar S>
using Evaluator = std::function<Verdict(const Env<S>&)>;

struct Identity {
  std::string name;
  CheckId check;
  std::vector<OperandKind> operands;
  Scope scope = Scope::kAlways;
  Quantifier quantifier = Quantifier::kForAll;
  /// Lower bound on random trials for this identity.
  std::size_t min_random = 0;
  /// Builds seed-derived parameters (coset representative sets).
  std::function<Json(const TransferContext&, std::uint64_t)> make_params;
  Evaluator<ExactComplex> exact;
  Evaluator<FloatComplex> approx;
};

const std::vector<Identity>& registry();
const Identity& find_identity(std::string_view name);
bool applicable(const Identity& id, const TransferContext& ctx);
std::string scope_reason(Scope scope);

}  // namespace cosetalg::verify
