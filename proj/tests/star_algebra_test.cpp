#include <gtest/gtest.h>

#include "cosetalg/error.hpp"
#include "cosetalg/star_algebra.hpp"
#include "test_support.hpp"

using namespace cosetalg;
using namespace testing_support;

TEST(GroupConvolution, Examples) {
  auto ctx = context("C2", "{e}");
  const auto& g = ctx.group();
  const auto& haar = ctx.haar();
  auto a = Function<C>::indicator(ctx.group_space(), 1);
  EXPECT_EQ(conv_g_functions(g, haar, a, a), (Function<C>::indicator(ctx.group_space(), 0)));
  std::mt19937 rng(1);
  auto s3 = context("S3", "{e}");
  auto f = random_on<Function<C>>(rng, s3.group_space());
  auto e = Function<C>::indicator(s3.group_space(), 0);
  EXPECT_EQ(conv_g_functions(s3.group(), s3.haar(), e, f), f);
  EXPECT_TRUE(conv_g_functions(s3.group(), s3.haar(), Function<C>::zero(s3.group_space()), f).is_zero());
  EXPECT_EQ(inv_g_function(s3.group(), inv_g_function(s3.group(), f)), f);
  EXPECT_EQ(inv_g_function(s3.group(), Function<C>::indicator(s3.group_space(), 2)),
            (Function<C>::indicator(s3.group_space(), 5)));
}

TEST(GroupConvolution, MeasuresMatchDoubleSum) {
  std::mt19937 rng(2);
  for (auto [name, sub] : {std::pair{"S3", "{e}"}, {"D4", "<r>"}, {"A4", "V4"}}) {
    auto ctx = context(name, sub);
    auto m = model(ctx);
    const auto& g = ctx.group();
    for (int t = 0; t < 5; ++t) {
      auto a = random_on<Measure<C>>(rng, ctx.group_space());
      auto b = random_on<Measure<C>>(rng, ctx.group_space());
      EXPECT_EQ(values(conv_g_measures(g, a, b)), oracle::group_conv_measures(m, values(a), values(b)));
      EXPECT_EQ(inv_g_measure(g, conv_g_measures(g, a, b)),
                conv_g_measures(g, inv_g_measure(g, b), inv_g_measure(g, a)));
      EXPECT_EQ(inv_g_measure(g, inv_g_measure(g, a)), a);
      EXPECT_EQ(tv_norm(inv_g_measure(g, a)), tv_norm(a));
    }
    for (auto x : g.elements()) {
      for (auto y : g.elements()) {
        EXPECT_EQ(conv_g_measures(g, Measure<C>::indicator(ctx.group_space(), x.index),
                                  Measure<C>::indicator(ctx.group_space(), y.index)),
                  (Measure<C>::indicator(ctx.group_space(), g.product(x, y).index)));
      }
    }
  }
}

TEST(GroupConvolution, QuaternionAntiHomomorphism) {
  auto ctx = context("Q8", "<i>");
  const auto& g = ctx.group();
  std::mt19937 rng(3);
  for (int t = 0; t < 5; ++t) {
    auto a = random_on<Measure<C>>(rng, ctx.group_space());
    auto b = random_on<Measure<C>>(rng, ctx.group_space());
    EXPECT_EQ(inv_g_measure(g, conv_g_measures(g, a, b)),
              conv_g_measures(g, inv_g_measure(g, b), inv_g_measure(g, a)));
  }
}

TEST(GroupConvolution, EmbeddingIsHomomorphismForAnyWeight) {
  std::mt19937 rng(4);
  for (Rational c : {Rational(1), Rational(3), Rational(2, 5)}) {
    auto ctx = context("S3", "<(01)>", c);
    for (int t = 0; t < 5; ++t) {
      auto f = random_on<Function<C>>(rng, ctx.group_space());
      auto g = random_on<Function<C>>(rng, ctx.group_space());
      EXPECT_EQ(embed_function_G(conv_g_functions(ctx.group(), ctx.haar(), f, g), ctx.haar()),
                conv_g_measures(ctx.group(), embed_function_G(f, ctx.haar()), embed_function_G(g, ctx.haar())));
    }
  }
}

TEST(CosetFunctions, MatchLiftConvolvePushOracle) {
  std::mt19937 rng(5);
  for (const auto& p : catalog_pairs()) {
    TransferContext ctx(p.group, p.subgroup, Rational(2, 3));
    if (ctx.group().permutations().empty()) continue;
    auto m = model(ctx);
    SCOPED_TRACE(p.group->label() + " / " + p.subgroup.label());
    auto phi = random_on<Function<C>>(rng, ctx.coset_space());
    auto psi = random_on<Function<C>>(rng, ctx.coset_space());
    EXPECT_EQ(values(conv_coset_functions(ctx, phi, psi)),
              oracle::coset_conv_functions(m, values(phi), values(psi), Rational(2, 3)));
    EXPECT_EQ(values(inv_coset_function(ctx, phi)), oracle::coset_inv_function(m, values(phi)));
  }
}

TEST(CosetFunctions, Examples) {
  auto ctx = context("S3", "<(01)>");
  auto m = model(ctx);
  auto e_h = Function<C>::indicator(ctx.coset_space(), 0);
  EXPECT_EQ(values(conv_coset_functions(ctx, e_h, e_h)),
            oracle::coset_conv_functions(m, values(e_h), values(e_h), Rational(1)));
  auto ind = Function<C>::indicator(ctx.coset_space(), 1);
  EXPECT_EQ(values(inv_coset_function(ctx, ind)), (std::vector<C>{cx(0), half(), half()}));
  Function<C> constant(ctx.coset_space(), std::vector<C>(3, cx(5)));
  EXPECT_EQ(inv_coset_function(ctx, constant), constant);

  auto trivial = context("S3", "{e}");
  std::mt19937 rng(6);
  auto f = random_on<Function<C>>(rng, trivial.coset_space());
  auto g = random_on<Function<C>>(rng, trivial.coset_space());
  auto as_g = [&](const Function<C>& v) { return Function<C>(trivial.group_space(), values(v)); };
  EXPECT_EQ(values(conv_coset_functions(trivial, f, g)),
            values(conv_g_functions(trivial.group(), trivial.haar(), as_g(f), as_g(g))));
  EXPECT_EQ(values(inv_coset_function(trivial, f)), values(inv_g_function(trivial.group(), as_g(f))));
}

TEST(CosetMeasures, MatchPairingOracle) {
  std::mt19937 rng(7);
  for (const auto& p : catalog_pairs()) {
    TransferContext ctx(p.group, p.subgroup);
    if (ctx.group().permutations().empty()) continue;
    auto m = model(ctx);
    SCOPED_TRACE(p.group->label() + " / " + p.subgroup.label());
    auto a = random_on<Measure<C>>(rng, ctx.coset_space());
    auto b = random_on<Measure<C>>(rng, ctx.coset_space());
    EXPECT_EQ(values(conv_coset_measures(ctx, a, b)), oracle::coset_conv_measures(m, values(a), values(b)));
    EXPECT_EQ(values(inv_coset_measure(ctx, a)), oracle::coset_inv_measure(m, values(a)));
  }
}

TEST(CosetMeasures, Examples) {
  auto ctx = context("S3", "<(01)>");
  auto delta_eh = Measure<C>::indicator(ctx.coset_space(), 0);
  std::mt19937 rng(8);
  auto lambda = random_on<Measure<C>>(rng, ctx.coset_space());
  EXPECT_EQ(conv_coset_measures(ctx, lambda, delta_eh), lambda);
  EXPECT_EQ(conv_coset_measures(ctx, delta_eh, lambda),
            inv_coset_measure(ctx, inv_coset_measure(ctx, lambda)));
  EXPECT_EQ(inv_coset_measure(ctx, delta_eh), delta_eh);
  EXPECT_EQ(values(inv_coset_measure(ctx, Measure<C>::indicator(ctx.coset_space(), 1))),
            (std::vector<C>{cx(0), half(), half()}));

  auto s3e = context("S3", "{e}");
  auto a = random_on<Measure<C>>(rng, s3e.coset_space());
  auto b = random_on<Measure<C>>(rng, s3e.coset_space());
  auto as_g = [&](const Measure<C>& v) { return Measure<C>(s3e.group_space(), values(v)); };
  EXPECT_EQ(values(conv_coset_measures(s3e, a, b)), values(conv_g_measures(s3e.group(), as_g(a), as_g(b))));
  EXPECT_EQ(values(inv_coset_measure(s3e, a)), values(inv_g_measure(s3e.group(), as_g(a))));
}

TEST(CompatibilityMu, HoldsOnCatalog) {
  std::mt19937 rng(9);
  auto zero_ctx = context("S3", "<(01)>");
  EXPECT_TRUE(compatibility_mu(zero_ctx, Function<C>::zero(zero_ctx.coset_space()),
                               Function<C>::zero(zero_ctx.coset_space())));
  for (const auto& p : catalog_pairs()) {
    for (Rational c : {Rational(1), Rational(5, 2)}) {
      TransferContext ctx(p.group, p.subgroup, c);
      auto phi = random_on<Function<C>>(rng, ctx.coset_space());
      auto phi2 = random_on<Function<C>>(rng, ctx.coset_space());
      EXPECT_TRUE(compatibility_mu(ctx, phi, phi2)) << p.group->label() << " / " << p.subgroup.label();
    }
  }
}

TEST(QuotientGroup, Oracle) {
  auto c6 = context("C6", "C2");
  auto q = quotient_group(c6);
  EXPECT_EQ(q->order(), 3u);
  // C3: every non-identity element has order 3.
  for (auto x : q->elements()) {
    if (x != q->identity()) EXPECT_NE(q->product(x, x), q->identity());
  }
  std::mt19937 rng(10);
  for (auto [g, h] : {std::pair{"C6", "C2"}, {"S3", "A3"}, {"S4", "V4"}, {"S4", "A4"}, {"C6", "C3"}}) {
    auto ctx = context(g, h);
    auto a = random_on<Measure<C>>(rng, ctx.coset_space());
    auto b = random_on<Measure<C>>(rng, ctx.coset_space());
    EXPECT_EQ(conv_coset_measures(ctx, a, b), quotient_group_oracle(ctx, a, b)) << g << "/" << h;
  }
  auto whole = context("S3", "S3");
  Measure<C> a(whole.coset_space(), {cx(2, 1)}), b(whole.coset_space(), {cx(0, 3)});
  EXPECT_EQ(quotient_group_oracle(whole, a, b)[0], cx(2, 1) * cx(0, 3));
  EXPECT_THROW(quotient_group(context("S3", "<(01)>")), Error);
}

TEST(Variants, MutantsChangeResults) {
  auto ctx = context("S3", "<(01)>");
  auto psi = Function<C>::indicator(ctx.coset_space(), 1);
  EXPECT_EQ(j_function(ctx.with_variant(FormulaVariant::kDropJ), psi), psi);
  auto lambda = Measure<C>(ctx.coset_space(), {cx(0, 1), cx(1), cx(0)});
  EXPECT_NE(inv_coset_measure(ctx.with_variant(FormulaVariant::kDropConjugation), lambda),
            inv_coset_measure(ctx, lambda));
  auto a = Measure<C>::indicator(ctx.coset_space(), 1);
  EXPECT_NE(conv_coset_measures(ctx.with_variant(FormulaVariant::kDropHAverage), a, a),
            conv_coset_measures(ctx, a, a));
}
