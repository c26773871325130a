#include <gtest/gtest.h>

#include "cosetalg/io.hpp"
#include "test_support.hpp"

using namespace cosetalg;
using namespace testing_support;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInconsistentContext;
}

}  // namespace

TEST(JsonText, ParseErrorCarriesLineAndColumn) {
  try {
    parse_json_text("{\n  \"a\": 1,\n  \"b\": ]\n}", "ops.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("ops.json:3:8"), std::string::npos) << e.what();
  }
}

TEST(GroupJson, TableRoundTripKeepsIndices) {
  for (const auto& pair : catalog_pairs()) {
    const auto& g = *pair.group;
    auto back = group_from_json(group_to_json(g));
    ASSERT_EQ(back->order(), g.order());
    EXPECT_EQ(back->label(), g.label());
    for (auto a : g.elements()) {
      EXPECT_EQ(back->element_name(a), g.element_name(a));
      for (auto b : g.elements()) EXPECT_EQ(back->product(a, b), g.product(a, b));
    }
    auto h = subgroup_from_json(back, subgroup_to_json(pair.subgroup));
    EXPECT_EQ(h.label(), pair.subgroup.label());
    EXPECT_EQ(h.order(), pair.subgroup.order());
  }
}

TEST(GroupJson, GeneratorForm) {
  auto g = group_from_json(parse_json_text(R"({"label": "S3", "degree": 3, "generators": [[1,0,2],[1,2,0]]})", "g"));
  EXPECT_EQ(g->order(), 6u);
  EXPECT_EQ(code_of([] { group_from_json(parse_json_text(R"({"order": 2})", "g")); }), ErrorCode::kParseError);
}

TEST(GroupJson, SubgroupValidation) {
  auto g = find_catalog_group("S3")->group;
  EXPECT_EQ(code_of([&] { subgroup_from_json(g, parse_json_text(R"({"members": [0, 9]})", "h")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] { subgroup_from_json(g, parse_json_text(R"({"members": [0, 2]})", "h")); }),
            ErrorCode::kNotASubgroup);
}

TEST(ValuesJson, RoundTripExact) {
  auto ctx = context("S3", "<(01)>");
  std::mt19937 rng(3);
  auto m = random_on<Measure<C>>(rng, ctx.coset_space());
  auto f = random_on<Function<C>>(rng, ctx.group_space());
  EXPECT_EQ(measure_from_json<C>(to_json(m), ctx.coset_space()), m);
  EXPECT_EQ(function_from_json<C>(to_json(f), ctx.group_space()), f);
  auto j = to_json(Measure<C>::indicator(ctx.coset_space(), 1));
  EXPECT_EQ(j.dump(), R"({"space":"G/H","atoms":[{"index":1,"re":"1/1","im":"0/1"}]})");
}

TEST(ValuesJson, FloatReadsRationalStrings) {
  auto ctx = context("C6", "C2");
  auto j = parse_json_text(R"({"space": "G/H", "values": [{"index": 2, "re": "1/4", "im": -0.5}]})", "f");
  auto f = function_from_json<FloatComplex>(j, ctx.coset_space());
  EXPECT_EQ(f[2], FloatComplex(0.25, -0.5));
  EXPECT_EQ(f[0], FloatComplex(0.0, 0.0));
}

TEST(ValuesJson, Errors) {
  auto ctx = context("S3", "<(01)>");
  auto parse = [](const char* text) { return parse_json_text(text, "x"); };
  EXPECT_EQ(code_of([&] { measure_from_json<C>(parse(R"({"space": "G", "atoms": []})"), ctx.coset_space()); }),
            ErrorCode::kSpaceMismatch);
  EXPECT_EQ(code_of([&] {
              measure_from_json<C>(parse(R"({"space": "G/H", "atoms": [{"index": 3}]})"), ctx.coset_space());
            }),
            ErrorCode::kSpaceMismatch);
  EXPECT_EQ(code_of([&] {
              measure_from_json<C>(parse(R"({"space": "G/H", "atoms": [{"index": 1}, {"index": 1}]})"),
                                   ctx.coset_space());
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] {
              function_from_json<C>(parse(R"({"space": "G/H", "values": [{"index": 0, "re": "1/0"}]})"),
                                    ctx.coset_space());
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] { function_from_json<C>(parse(R"({"space": "G/H"})"), ctx.coset_space()); }),
            ErrorCode::kParseError);
}
