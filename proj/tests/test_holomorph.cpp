#include <gtest/gtest.h>

#include "brace_forge/catalog.hpp"
#include "brace_forge/holomorph.hpp"
#include "brace_forge/isomorphism.hpp"
#include "oracles.hpp"

using namespace brace_forge;

TEST(Holomorph, Orders) {
  EXPECT_EQ(holomorph(catalog::cyclic(2)).group.order(), 2u);
  HolomorphGroup h = holomorph(parse_group("C4xC2"));
  EXPECT_EQ(h.aut.order(), oracle::automorphisms(oracle::table_of(h.base)).size());
  EXPECT_EQ(h.group.order(), 64u);
  EXPECT_EQ(holomorph(parse_group("C3^3")).group.order(), 27u * 11232u);
}

TEST(Holomorph, ActionIsFaithfulHomomorphism) {
  HolomorphGroup h = holomorph(parse_group("S3"));
  Index n = h.base.order();
  for (Index x = 0; x < h.group.order(); ++x)
    for (Index y = 0; y < h.group.order(); ++y)
      for (Index p = 0; p < n; ++p) ASSERT_EQ(h.act(h.group.mul(x, y), p), h.act(x, h.act(y, p)));
}

TEST(RegularSearch, Examples) {
  auto c2 = find_regular_subgroups(holomorph(catalog::cyclic(2)), 2);
  EXPECT_EQ(c2.found.size(), 1u);
  EXPECT_TRUE(c2.complete);

  HolomorphGroup h = holomorph(parse_group("C4xC2"));
  RegularSearchOptions o;
  o.iso_filter = parse_group("C2^3");
  auto r = find_regular_subgroups(h, 8, o);
  ASSERT_FALSE(r.found.empty());
  for (auto const& reg : r.found) EXPECT_TRUE(is_regular(h, reg.members));
  SkewBrace b = brace_from_regular_subgroup(h, r.found.front());
  EXPECT_TRUE(b.validation().mode.exhaustive);
  EXPECT_TRUE(are_isomorphic(b.add_group(), parse_group("C4xC2")));
  EXPECT_TRUE(are_isomorphic(b.mul_group(), parse_group("C2^3")));
}

TEST(RegularSearch, C33Targets) {
  HolomorphGroup h = holomorph(parse_group("C3^3"));
  for (std::string target : {"C3xC9", "M3"}) {
    RegularSearchOptions o;
    o.iso_filter = parse_group(target);
    o.max_results = 1;
    auto r = find_regular_subgroups(h, 27, o);
    ASSERT_EQ(r.found.size(), 1u) << target;
    SkewBrace b = brace_from_regular_subgroup(h, r.found.front());
    EXPECT_TRUE(b.validation().ok && b.validation().mode.exhaustive);
    EXPECT_TRUE(is_elementary_abelian(b.add_group()));
    EXPECT_TRUE(are_isomorphic(b.mul_group(), parse_group(target)));
    EXPECT_EQ(classify(b.mul_group()),
              target == "M3" ? ClassificationLabel::nil : ClassificationLabel::ab);
  }
}

TEST(RegularSearch, CountsMatchAffineOracle) {
  for (unsigned p : {2u, 3u}) {
    auto r = find_regular_subgroups(holomorph(catalog::elementary_abelian(p, 2)), p * p);
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.found.size(), oracle::count_regular_affine(p)) << p;
  }
}

TEST(RegularSearch, ResultsAreDistinctRegularSubgroups) {
  HolomorphGroup h = holomorph(parse_group("D8"));
  auto r = find_regular_subgroups(h, 8);
  EXPECT_TRUE(r.complete);
  std::set<std::vector<Index>> seen;
  for (auto const& reg : r.found) {
    EXPECT_TRUE(is_regular(h, reg.members));
    EXPECT_TRUE(generate_subgroup(h.group, reg.members).members() == reg.members);
    for (Index x = 0; x < 8; ++x) EXPECT_EQ(h.act(reg.by_point[x], 0), x);
    EXPECT_TRUE(seen.insert(reg.members).second);
    SkewBrace b = brace_from_regular_subgroup(h, reg);
    EXPECT_TRUE(b.validation().ok);
  }
}

TEST(RegularSearch, ResumableAcrossBudgets) {
  HolomorphGroup h = holomorph(parse_group("C2^3"));
  auto whole = find_regular_subgroups(h, 8);
  RegularSubgroupSearch s(h, {});
  s.run(std::chrono::duration<double>(0));
  while (!s.result().complete) s.run(std::chrono::milliseconds(1));
  ASSERT_EQ(s.result().found.size(), whole.found.size());
  for (std::size_t i = 0; i < whole.found.size(); ++i)
    EXPECT_EQ(s.result().found[i].members, whole.found[i].members);
}

TEST(RegularSearch, TranslationsGiveTrivialBrace) {
  for (std::string expr : {"C2", "S3", "C4xC2", "D8", "A4"}) {
    HolomorphGroup h = holomorph(parse_group(expr));
    RegularSubgroup t = translation_subgroup(h);
    EXPECT_TRUE(is_regular(h, t.members));
    EXPECT_TRUE(classify_brace(brace_from_regular_subgroup(h, t)).is_trivial) << expr;
  }
}

TEST(RegularSearch, WrongTargetOrderRejected) {
  EXPECT_THROW(find_regular_subgroups(holomorph(catalog::cyclic(4)), 8), InvalidArgument);
}
