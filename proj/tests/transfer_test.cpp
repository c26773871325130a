#include <gtest/gtest.h>

#include "cosetalg/error.hpp"
#include "cosetalg/transfer.hpp"
#include "test_support.hpp"

using namespace cosetalg;
using namespace testing_support;

TEST(ThFunction, Examples) {
  auto trivial = context("S3", "{e}");
  std::mt19937 rng(1);
  auto f = random_on<Function<C>>(rng, trivial.group_space());
  EXPECT_EQ(values(th_function(trivial, f)), values(f));

  auto ctx = context("S3", "<(01)>");
  Function<C> one(ctx.group_space(), std::vector<C>(6, cx(1)));
  EXPECT_EQ(values(th_function(ctx, one)), std::vector<C>(3, cx(1)));
  auto th_e = th_function(ctx, Function<C>::indicator(ctx.group_space(), 0));
  EXPECT_EQ(values(th_e), (std::vector<C>{half(), cx(0), cx(0)}));
}

TEST(ThFunction, MatchesFiberAverageOracle) {
  std::mt19937 rng(2);
  for (const auto& p : catalog_pairs()) {
    TransferContext ctx(p.group, p.subgroup);
    if (ctx.group().permutations().empty()) continue;
    auto m = model(ctx);
    auto f = random_on<Function<C>>(rng, ctx.group_space());
    EXPECT_EQ(values(th_function(ctx, f)), oracle::push_function(m, values(f))) << p.group->label();
    auto nu = random_on<Measure<C>>(rng, ctx.group_space());
    EXPECT_EQ(values(th_measure(ctx, nu)), oracle::push_measure(m, values(nu)));
  }
}

TEST(LiftFunction, RoundTrip) {
  auto ctx = context("S3", "<(01)>");
  EXPECT_TRUE(lift_function(ctx, Function<C>::zero(ctx.coset_space())).is_zero());
  std::mt19937 rng(4);
  for (int t = 0; t < 10; ++t) {
    auto psi = random_on<Function<C>>(rng, ctx.coset_space());
    EXPECT_EQ(th_function(ctx, lift_function(ctx, psi)), psi);
    EXPECT_EQ(sup_norm(lift_function(ctx, psi)), sup_norm(psi));
  }
  auto trivial = context("S3", "{e}");
  auto psi = random_on<Function<C>>(rng, trivial.coset_space());
  EXPECT_EQ(values(lift_function(trivial, psi)), values(psi));
}

TEST(ThMeasure, Examples) {
  auto ctx = context("S3", "<(01)>");
  EXPECT_EQ(th_measure(ctx, Measure<C>::indicator(ctx.group_space(), 4)),
            (Measure<C>::indicator(ctx.coset_space(), 1)));
  EXPECT_TRUE(th_measure(ctx, Measure<C>::zero(ctx.group_space())).is_zero());
  // Opposite atoms on e and (01) cancel inside eH.
  Measure<C> cancel(ctx.group_space(), {cx(1), cx(-1), cx(0), cx(0), cx(0), cx(0)});
  auto pushed = th_measure(ctx, cancel);
  EXPECT_TRUE(pushed.is_zero());
  EXPECT_LT(tv_norm(pushed), tv_norm(cancel));
}

TEST(LiftMeasure, Examples) {
  auto ctx = context("S3", "<(01)>");
  auto lifted = lift_measure(ctx, Measure<C>::indicator(ctx.coset_space(), 1));
  EXPECT_EQ(values(lifted), (std::vector<C>{cx(0), cx(0), half(), cx(0), half(), cx(0)}));
  EXPECT_TRUE(lift_measure(ctx, Measure<C>::zero(ctx.coset_space())).is_zero());
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    auto lambda = random_on<Measure<C>>(rng, ctx.coset_space());
    EXPECT_EQ(th_measure(ctx, lift_measure(ctx, lambda)), lambda);
    EXPECT_EQ(tv_norm(lift_measure(ctx, lambda)), tv_norm(lambda));
    EXPECT_TRUE(membership(ctx, lift_measure(ctx, lambda), SpaceTag::kMGroup));
  }
}

TEST(JFunction, Examples) {
  auto ctx = context("S3", "<(01)>");
  auto j = j_function(ctx, Function<C>::indicator(ctx.coset_space(), 1));
  EXPECT_EQ(values(j), (std::vector<C>{cx(0), half(), half()}));
  EXPECT_EQ(j_function(ctx, j), j);

  std::mt19937 rng(6);
  for (const auto& p : catalog_pairs()) {
    TransferContext c(p.group, p.subgroup);
    auto psi = random_on<Function<C>>(rng, c.coset_space());
    if (c.subgroup_is_normal()) EXPECT_EQ(j_function(c, psi), psi) << p.group->label();
    EXPECT_TRUE(membership(c, j_function(c, psi), SpaceTag::kAGH));
    EXPECT_LE(sup_norm(j_function(c, psi)), sup_norm(psi));
  }
}

TEST(Membership, Examples) {
  auto ctx = context("S3", "<(01)>");
  Function<C> constant(ctx.coset_space(), std::vector<C>(3, cx(2, 1)));
  EXPECT_TRUE(membership(ctx, constant, SpaceTag::kAGH));
  EXPECT_TRUE(membership(ctx, Measure<C>::indicator(ctx.coset_space(), 0), SpaceTag::kMInvGH));
  EXPECT_FALSE(membership(ctx, Measure<C>::indicator(ctx.coset_space(), 1), SpaceTag::kMInvGH));
  EXPECT_THROW(membership(ctx, constant, SpaceTag::kMGroup), Error);
  EXPECT_THROW(parse_space_tag("B(G/H)"), Error);
  EXPECT_EQ(parse_space_tag("𝓜(G/H)"), SpaceTag::kMInvGH);
  EXPECT_EQ(parse_space_tag("A(G:H)"), SpaceTag::kAGroup);
}

TEST(ProjectInvariant, Examples) {
  auto ctx = context("S3", "<(01)>");
  auto p = project_invariant(ctx, Measure<C>::indicator(ctx.coset_space(), 1));
  EXPECT_EQ(values(p), (std::vector<C>{cx(0), half(), half()}));
  EXPECT_TRUE(membership(ctx, p, SpaceTag::kMInvGH));
  EXPECT_EQ(project_invariant(ctx, p), p);
  EXPECT_TRUE(project_invariant(ctx, Measure<C>::zero(ctx.coset_space())).is_zero());
}

TEST(TransferContext, RepresentativeChoiceDoesNotMatter) {
  auto ctx = context("S3", "<(01)>");
  auto other = ctx.with_representatives({GroupElement{1}, GroupElement{4}, GroupElement{5}});
  std::mt19937 rng(8);
  for (int t = 0; t < 5; ++t) {
    auto f = random_on<Function<C>>(rng, ctx.group_space());
    EXPECT_EQ(th_function(ctx, f), th_function(other, f));
    auto psi = random_on<Function<C>>(rng, ctx.coset_space());
    EXPECT_EQ(j_function(ctx, psi), j_function(other, psi));
  }
  EXPECT_THROW(ctx.with_representatives({GroupElement{2}, GroupElement{4}, GroupElement{5}}), Error);
}

TEST(TransferContext, FloatModeAgrees) {
  auto ctx = context("S4", "S3");
  std::mt19937 rng(9);
  auto f = random_on<Function<C>>(rng, ctx.group_space());
  std::vector<FloatComplex> fv;
  for (const auto& v : f.values()) fv.emplace_back(v.real().get_d(), v.imag().get_d());
  auto exact = th_function(ctx, f);
  auto approx = th_function(ctx, Function<FloatComplex>(ctx.group_space(), fv));
  for (std::size_t i = 0; i < exact.size(); ++i) {
    EXPECT_NEAR(approx[i].real(), exact[i].real().get_d(), 1e-12);
    EXPECT_NEAR(approx[i].imag(), exact[i].imag().get_d(), 1e-12);
  }
}
