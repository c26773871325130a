#include <gtest/gtest.h>

#include <set>

#include "cosetalg/catalog.hpp"
#include "cosetalg/error.hpp"
#include "cosetalg/group.hpp"
#include "oracle.hpp"

using namespace cosetalg;

namespace {

GroupPtr s3_from_generators() {
  return group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, "S3");
}

void expect_error(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(GroupFromTable, TrivialAndC2) {
  auto trivial = group_from_table(1, {{0}}, "1");
  EXPECT_EQ(trivial->order(), 1u);
  EXPECT_EQ(trivial->identity().index, 0u);

  auto c2 = group_from_table(2, {{0, 1}, {1, 0}}, "C2");
  EXPECT_EQ(c2->order(), 2u);
  EXPECT_EQ(c2->inverse(GroupElement{1}).index, 1u);
}

TEST(GroupFromTable, S3FromBruteForceBijections) {
  auto perms = oracle::all_permutations(3);
  ASSERT_EQ(perms.size(), 6u);
  auto s3 = group_from_table(6, oracle::table_of(perms), "S3");
  EXPECT_EQ(s3->order(), 6u);
  EXPECT_EQ(s3->identity().index, 0u);
  EXPECT_TRUE(is_associative(*s3));
  EXPECT_TRUE(is_latin_square(*s3));
  for (auto x : s3->elements()) {
    EXPECT_EQ(oracle::compose(perms[x.index], perms[s3->inverse(x).index]), (oracle::Perm{0, 1, 2}));
  }
}

TEST(GroupFromTable, RejectsBadTables) {
  expect_error(ErrorCode::kNoIdentity, [] { group_from_table(2, {{0, 0}, {0, 0}}, "x"); });
  expect_error(ErrorCode::kNotInvertible, [] { group_from_table(2, {{0, 1}, {1, 1}}, "x"); });
  // Identity 0, every element self-inverse, but (1*2)*1 != 1*(2*1).
  expect_error(ErrorCode::kNotAssociative,
               [] { group_from_table(3, {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}}, "x"); });
  expect_error(ErrorCode::kParseError, [] { group_from_table(2, {{0, 2}, {1, 0}}, "x"); });
}

TEST(GroupFromPermutations, Orders) {
  auto s3 = s3_from_generators();
  EXPECT_EQ(s3->order(), 6u);
  EXPECT_EQ(group_from_permutations(4, {{1, 2, 3, 0}}, "C4")->order(), 4u);
  EXPECT_EQ(group_from_permutations(1, {}, "1")->order(), 1u);
}

TEST(GroupFromPermutations, BreadthFirstIndexing) {
  auto s3 = s3_from_generators();
  EXPECT_EQ(s3->element_name(GroupElement{0}), "e");
  EXPECT_EQ(s3->element_name(GroupElement{1}), "(01)");
  EXPECT_EQ(s3->element_name(GroupElement{2}), "(012)");
  EXPECT_EQ(s3->element_name(GroupElement{3}), "(12)");
  EXPECT_EQ(s3->element_name(GroupElement{4}), "(02)");
  EXPECT_EQ(s3->element_name(GroupElement{5}), "(021)");
}

TEST(GroupFromPermutations, Errors) {
  expect_error(ErrorCode::kNotAPermutation, [] { group_from_permutations(3, {{0, 0, 1}}, "x"); });
  expect_error(ErrorCode::kClosureBudgetExceeded,
               [] { group_from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, "S4", 10); });
}

TEST(Subgroups, Closure) {
  auto s3 = s3_from_generators();
  GroupElement e = s3->identity();
  EXPECT_EQ(subgroup_closure(s3, std::span<const GroupElement>(&e, 1)).order(), 1u);
  std::vector<GroupElement> all(s3->elements().begin(), s3->elements().end());
  EXPECT_EQ(subgroup_closure(s3, all).order(), 6u);
  GroupElement t{1};
  EXPECT_EQ(subgroup_closure(s3, std::span<const GroupElement>(&t, 1)).order(), 2u);
  expect_error(ErrorCode::kNotASubgroup, [&] { Subgroup(s3, {GroupElement{0}, GroupElement{2}}, "bad"); });
}

TEST(Cosets, TrivialAndWholeSubgroup) {
  auto s3 = s3_from_generators();
  auto trivial = left_cosets(s3, subgroup_closure(s3, {}));
  EXPECT_EQ(trivial.size(), 6u);
  for (auto x : s3->elements()) EXPECT_EQ(trivial.coset_of(x), x.index);
  std::vector<GroupElement> all(s3->elements().begin(), s3->elements().end());
  auto whole = left_cosets(s3, subgroup_closure(s3, all));
  EXPECT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole.coset(0).size(), 6u);
}

TEST(Cosets, S3ModTransposition) {
  auto s3 = s3_from_generators();
  auto h = subgroup_closure(s3, std::vector{GroupElement{1}});
  auto c = left_cosets(s3, h);
  ASSERT_EQ(c.size(), 3u);
  std::vector<std::vector<std::uint32_t>> expected{{0, 1}, {2, 4}, {3, 5}};
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<std::uint32_t> got;
    for (auto g : c.coset(i)) got.push_back(g.index);
    EXPECT_EQ(got, expected[i]);
    EXPECT_EQ(c.representative(i).index, expected[i][0]);
  }
}

TEST(Normality, S3) {
  auto s3 = s3_from_generators();
  EXPECT_TRUE(is_normal(*s3, subgroup_closure(s3, {})));
  EXPECT_TRUE(is_normal(*s3, subgroup_closure(s3, std::vector{GroupElement{2}})));
  EXPECT_FALSE(is_normal(*s3, subgroup_closure(s3, std::vector{GroupElement{1}})));
}

TEST(Catalog, ContainsExpectedPairs) {
  const auto* s3 = find_catalog_group("S3");
  ASSERT_NE(s3, nullptr);
  EXPECT_EQ(s3->subgroups.size(), 4u);

  // Every listed S3 subgroup is one of the subgroups found by brute force.
  auto all = oracle::all_subgroups(s3->group->permutations());
  EXPECT_EQ(all.size(), 6u);
  for (const auto& h : s3->subgroups) {
    std::set<std::size_t> members;
    for (auto g : h.members()) members.insert(g.index);
    EXPECT_NE(std::find(all.begin(), all.end(), members), all.end()) << h.label();
  }

  auto pairs = catalog_pairs();
  EXPECT_GE(pairs.size(), 12u);
  bool normal = false, non_normal = false;
  for (const auto& p : pairs) {
    (is_normal(*p.group, p.subgroup) ? normal : non_normal) = true;
  }
  EXPECT_TRUE(normal);
  EXPECT_TRUE(non_normal);
  EXPECT_EQ(find_catalog_group("S4")->group->order(), 24u);
  auto s4_s3 = find_catalog_pair("S4", "S3");
  ASSERT_TRUE(s4_s3.has_value());
  EXPECT_FALSE(is_normal(*s4_s3->group, s4_s3->subgroup));
}

TEST(Catalog, StructuralInvariants) {
  for (const auto& p : catalog_pairs()) {
    const auto& g = *p.group;
    SCOPED_TRACE(g.label() + " / " + p.subgroup.label());
    EXPECT_TRUE(is_associative(g));
    EXPECT_TRUE(is_latin_square(g));
    auto c = left_cosets(p.group, p.subgroup);
    EXPECT_EQ(c.size() * p.subgroup.order(), g.order());
    for (auto x : g.elements()) {
      for (auto y : g.elements()) {
        EXPECT_EQ(c.coset_of(x) == c.coset_of(y), p.subgroup.contains(g.product(g.inverse(x), y)));
      }
    }
    // Normal iff every left coset equals the right coset through the same element.
    bool cosets_match = true;
    for (auto x : g.elements()) {
      std::set<std::uint32_t> left, right;
      for (auto h : p.subgroup.members()) {
        left.insert(g.product(x, h).index);
        right.insert(g.product(h, x).index);
      }
      cosets_match = cosets_match && left == right;
    }
    EXPECT_EQ(is_normal(g, p.subgroup), cosets_match);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (auto h : p.subgroup.members()) EXPECT_EQ(c.coset_of(g.product(c.representative(i), h)), i);
    }
    EXPECT_TRUE(p.subgroup.contains(c.representative(c.coset_of(g.identity()))));
  }
}

TEST(Catalog, QuaternionRelations) {
  auto q8 = quaternion_group();
  GroupElement minus_one{1}, i{2}, j{4}, k{6};
  EXPECT_EQ(q8->product(i, i), minus_one);
  EXPECT_EQ(q8->product(j, j), minus_one);
  EXPECT_EQ(q8->product(k, k), minus_one);
  EXPECT_EQ(q8->product(i, j), k);
  EXPECT_EQ(q8->product(q8->product(i, j), k), minus_one);
}
