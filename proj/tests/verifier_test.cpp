#include <gtest/gtest.h>

#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cosetalg/verifier.hpp"
#include "test_support.hpp"

using namespace cosetalg;
using namespace testing_support;

namespace {

std::vector<CheckResult> failures(const std::vector<CheckResult>& results) {
  std::vector<CheckResult> out;
  for (const auto& r : results) {
    if (r.status == Status::kFail) out.push_back(r);
  }
  return out;
}

std::size_t coset_containing(const TransferContext& ctx, std::string_view name) {
  for (auto g : ctx.group().elements()) {
    if (ctx.group().element_name(g) == name) return ctx.cosets().coset_of(g);
  }
  throw std::logic_error("no element named " + std::string(name));
}

}  // namespace

TEST(CheckIds, TableIsComplete) {
  auto ids = all_checks();
  ASSERT_EQ(ids.size(), 23u);
  std::set<std::string> names;
  for (auto id : ids) {
    names.insert(std::string(to_string(id)));
    EXPECT_EQ(parse_check_id(to_string(id)), id);
    EXPECT_FALSE(statement(id).empty());
    EXPECT_FALSE(identity_names(id).empty()) << to_string(id);
  }
  EXPECT_EQ(names.size(), 23u);
  EXPECT_THROW(parse_check_id("Z9"), Error);
  EXPECT_EQ(parse_mode("float"), Mode::kFloat);
  EXPECT_THROW(parse_mode("fast"), Error);
}

TEST(RunCheck, StarPairingWithFiftyTrials) {
  VerifyConfig config;
  config.trials = 50;
  auto r = run_check(CheckId::kM4, context("S3", "<(01)>"), config);
  EXPECT_EQ(r.status, Status::kPass) << r.reason;
  EXPECT_EQ(r.trials, 50u);
  EXPECT_GE(r.evaluations, 150u);
  EXPECT_FALSE(r.witness);
}

TEST(RunCheck, QuotientCheckSkippedForNonNormal) {
  auto r = run_check(CheckId::kN1, context("S3", "<(01)>"), VerifyConfig{});
  EXPECT_EQ(r.status, Status::kSkipped);
  EXPECT_EQ(r.reason, "H not normal");
  EXPECT_EQ(run_check(CheckId::kN1, context("C2", "{e}"), VerifyConfig{}).status, Status::kPass);
  EXPECT_EQ(run_check(CheckId::kN1, context("S3", "A3"), VerifyConfig{}).status, Status::kPass);
}

TEST(RunCheck, DropJMutantWitnessIsIndicatorOfTranspositionCoset) {
  auto ctx = context("S3", "<(01)>").with_variant(FormulaVariant::kDropJ);
  auto r = run_check(CheckId::kJ1, ctx, VerifyConfig{});
  ASSERT_EQ(r.status, Status::kFail);
  ASSERT_TRUE(r.witness);
  const auto& ops = (*r.witness)["operands"];
  ASSERT_EQ(ops.size(), 1u);
  auto psi = function_from_json<C>(ops[0], ctx.coset_space());
  EXPECT_EQ(psi, (Function<C>::indicator(ctx.coset_space(), coset_containing(ctx, "(02)"))));
}

TEST(RunSuite, EmptyAndSingle) {
  EXPECT_TRUE(run_suite({}, VerifyConfig{}).empty());
  auto results = run_suite({*find_catalog_pair("C2", "{e}")}, VerifyConfig{});
  ASSERT_EQ(results.size(), 23u);
  for (std::size_t i = 0; i < results.size(); ++i) {
    EXPECT_EQ(results[i].id, all_checks()[i]);
    EXPECT_EQ(results[i].status, Status::kPass) << to_string(results[i].id) << " " << results[i].reason;
  }
}

TEST(RunSuite, FloatModeAndScaledHaarWeight) {
  std::vector<GroupPair> pairs{*find_catalog_pair("S3", "<(01)>"), *find_catalog_pair("C6", "C2")};
  VerifyConfig config;
  config.trials = 10;
  config.mode = Mode::kFloat;
  EXPECT_TRUE(failures(run_suite(pairs, config)).empty());
  config.mode = Mode::kExact;
  config.group_weight = Rational(3, 7);
  auto fails = failures(run_suite(pairs, config));
  EXPECT_TRUE(fails.empty()) << (fails.empty() ? "" : fails[0].reason);
}

TEST(RunSuite, NonNormalExhibitsReplay) {
  for (auto [g, h] : {std::pair{"S3", "<(01)>"}, {"S4", "S3"}}) {
    auto results = run_suite({*find_catalog_pair(g, h)}, VerifyConfig{});
    std::set<std::string> exhibited;
    for (const auto& r : results) {
      EXPECT_NE(r.status, Status::kFail) << to_string(r.id);
      for (const auto& o : r.observations) {
        auto replay = replay_witness(parse_json_text(o.dump(), "exhibit"));
        EXPECT_TRUE(replay.reproduced) << replay.identity;
        exhibited.insert(replay.identity);
      }
    }
    EXPECT_TRUE(exhibited.count("J1.moves_some_function")) << g;
    EXPECT_TRUE(exhibited.count("M5.double_star_moves_some_measure")) << g;
    EXPECT_TRUE(exhibited.count("M7.strict_decrease_exists")) << g;
  }
}

TEST(StrictDecrease, FoundByDifferenceOfIndicators) {
  auto r = run_check(CheckId::kM7, context("S3", "<(01)>"), VerifyConfig{});
  ASSERT_EQ(r.observations.size(), 1u);
  const auto& atoms = r.observations[0]["operands"][0]["atoms"];
  EXPECT_EQ(atoms.size(), 2u);
  EXPECT_EQ(r.observations[0]["lhs"], "0/1");
}

TEST(MutantSuite, EveryVariantIsCaughtAndReplays) {
  auto ctx = context("S3", "<(01)>");
  auto results = mutant_suite(ctx, VerifyConfig{});
  ASSERT_EQ(results.size(), 3 * all_checks().size());
  std::set<FormulaVariant> caught;
  for (const auto& r : failures(results)) {
    ASSERT_TRUE(r.witness);
    caught.insert(r.variant);
    auto replay = replay_witness(*r.witness);
    EXPECT_TRUE(replay.reproduced) << replay.identity;
    EXPECT_FALSE(replay.holds);
  }
  EXPECT_EQ(caught.size(), 3u);

  auto find = [&](FormulaVariant v, CheckId id) {
    for (const auto& r : results) {
      if (r.variant == v && r.id == id) return r;
    }
    throw std::logic_error("missing result");
  };
  EXPECT_EQ(find(FormulaVariant::kDropJ, CheckId::kF1).status, Status::kFail);
  EXPECT_EQ(find(FormulaVariant::kDropHAverage, CheckId::kW0).status, Status::kFail);
  EXPECT_EQ(find(FormulaVariant::kDropConjugation, CheckId::kM4).status, Status::kFail);
}

TEST(MutantSuite, RejectsNormalSubgroup) {
  try {
    mutant_suite(context("C6", "C2"), VerifyConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNormalSubgroupUseless);
  }
}

TEST(Replay, DetectsWitnessThatNoLongerFails) {
  auto ctx = context("S3", "<(01)>").with_variant(FormulaVariant::kDropJ);
  auto r = run_check(CheckId::kJ1, ctx, VerifyConfig{});
  ASSERT_TRUE(r.witness);
  Json w = *r.witness;
  w["variant"] = "faithful";
  auto replay = replay_witness(w);
  EXPECT_TRUE(replay.holds);
  EXPECT_FALSE(replay.reproduced);
  w["identity"] = "no.such.identity";
  EXPECT_THROW(replay_witness(w), Error);
}

TEST(Report, DeterministicAcrossThreadCounts) {
  std::vector<GroupPair> pairs{*find_catalog_pair("S3", "<(01)>"), *find_catalog_pair("D4", "<s>"),
                               *find_catalog_pair("A4", "V4")};
  VerifyConfig config;
  config.seed = 7;
  config.trials = 5;
  auto first = report_json(run_suite(pairs, config), config).dump();
#ifdef _OPENMP
  int saved = omp_get_max_threads();
  omp_set_num_threads(4);
#endif
  auto second = report_json(run_suite(pairs, config), config).dump();
#ifdef _OPENMP
  omp_set_num_threads(saved);
#endif
  EXPECT_EQ(first, second);
  config.seed = 8;
  EXPECT_NE(report_json(run_suite(pairs, config), config).dump(), first);
}

TEST(Report, ShapeAndMarkdown) {
  VerifyConfig config;
  config.trials = 3;
  auto results = run_suite({*find_catalog_pair("S3", "<(01)>")}, config);
  auto j = report_json(results, config);
  EXPECT_EQ(j["meta"]["seed"], 0);
  EXPECT_EQ(j["meta"]["trials"], 3);
  EXPECT_EQ(j["meta"]["mode"], "exact");
  EXPECT_EQ(j["summary"]["skipped"], 1);
  EXPECT_EQ(j["results"].size(), 23u);
  auto md = report_markdown(results, config);
  EXPECT_NE(md.find("## Coverage"), std::string::npos);
  EXPECT_NE(md.find("| N1 | skipped |"), std::string::npos);
  EXPECT_NE(md.find("## S3 / <(01)>"), std::string::npos);
}
