#include <gtest/gtest.h>

#include "brace_forge/catalog.hpp"
#include "brace_forge/isomorphism.hpp"
#include "oracles.hpp"

using namespace brace_forge;

namespace {

Index find_with_order(FiniteGroup const& g, Index k) {
  for (Index x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) return x;
  return 0;
}

std::vector<std::string> catalog_exprs() {
  std::vector<std::string> out;
  for (auto const& e : catalog_entries())
    if (!e.metadata_only && std::stoul(e.expected_order) <= 400) out.push_back(e.expr);
  return out;
}

}  // namespace

TEST(FiniteGroup, TableFactoryMatchesOracleLaws) {
  FiniteGroup g = catalog::symmetric(3);
  auto t = oracle::table_of(g);
  EXPECT_TRUE(oracle::is_associative(t));
  EXPECT_EQ(oracle::identity(t), 0u);
  for (Index x = 0; x < g.order(); ++x) {
    EXPECT_EQ(g.inv(x), oracle::inverse(t, x));
    EXPECT_EQ(g.element_order(x), oracle::order_of(t, x));
  }
}

TEST(FiniteGroup, RejectsBadTables) {
  // Not associative: a Latin square on 3 symbols without a group law.
  std::vector<std::vector<Index>> bad = {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}};
  EXPECT_THROW(FiniteGroup::from_rows(bad), Error);
  std::vector<std::vector<Index>> no_identity = {{1, 0}, {0, 1}};
  EXPECT_THROW(FiniteGroup::from_rows(no_identity), Error);
}

TEST(FiniteGroup, LawsHoldOnCatalogGroups) {
  for (auto const& expr : catalog_exprs()) {
    FiniteGroup g = parse_group(expr);
    LawReport r = verify_group_laws(g);
    EXPECT_TRUE(r.ok) << expr;
    EXPECT_TRUE(r.mode.exhaustive) << expr;
  }
  LawReport big = verify_group_laws(parse_group("A5xA5"));
  EXPECT_TRUE(big.ok);
  EXPECT_FALSE(big.mode.exhaustive);
  EXPECT_GE(big.mode.count, 100000u);
}

TEST(FiniteGroup, TrivialGroupPredicates) {
  FiniteGroup one = parse_group("1");
  EXPECT_EQ(one.order(), 1u);
  EXPECT_TRUE(one.is_abelian());
  EXPECT_TRUE(is_nilpotent(one));
  EXPECT_TRUE(is_solvable(one));
  EXPECT_TRUE(is_supersolvable(one));
  EXPECT_FALSE(is_simple(one));
}

TEST(GenerateSubgroup, Examples) {
  FiniteGroup s3 = catalog::symmetric(3);
  Index t = find_with_order(s3, 2), c = find_with_order(s3, 3);
  EXPECT_EQ(generate_subgroup(s3, std::vector<Index>{t}).order(), 2u);
  EXPECT_EQ(generate_subgroup(s3, std::vector<Index>{t, c}).order(), 6u);
  EXPECT_EQ(generate_subgroup(s3, std::vector<Index>{}).members(), std::vector<Index>{0});
  EXPECT_THROW(generate_subgroup(s3, std::vector<Index>{6}), InvalidArgument);
}

TEST(GenerateSubgroup, MatchesOracleClosure) {
  FiniteGroup g = catalog::gl2_3();
  auto t = oracle::table_of(g);
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    std::vector<Index> gens = {rng.below(g.order()), rng.below(g.order())};
    EXPECT_EQ(generate_subgroup(g, gens).members(), oracle::closure(t, gens));
  }
}

TEST(NormalClosure, Examples) {
  FiniteGroup a5 = catalog::alternating(5);
  for (Index x = 1; x < a5.order(); x += 7)
    EXPECT_TRUE(normal_closure(a5, std::vector<Index>{x}).is_whole());
  FiniteGroup s3 = catalog::symmetric(3);
  EXPECT_EQ(normal_closure(s3, std::vector<Index>{find_with_order(s3, 3)}).order(), 3u);
  EXPECT_TRUE(normal_closure(s3, std::vector<Index>{0}).is_trivial());
}

TEST(NormalClosure, IsNormalAndMinimal) {
  FiniteGroup g = catalog::symmetric(4);
  auto t = oracle::table_of(g);
  auto subs = oracle::subgroups_by_generators(t, 2);
  for (Index x = 0; x < g.order(); ++x) {
    Subgroup n = normal_closure(g, std::vector<Index>{x});
    EXPECT_TRUE(oracle::is_normal(t, n.members()));
    for (auto const& h : subs)
      if (std::binary_search(h.begin(), h.end(), x) && oracle::is_normal(t, h)) {
        EXPECT_TRUE(std::includes(h.begin(), h.end(), n.members().begin(), n.members().end()));
      }
  }
}

TEST(Center, Examples) {
  EXPECT_TRUE(center(catalog::alternating(5)).is_trivial());
  FiniteGroup d8 = catalog::dihedral(8);
  EXPECT_EQ(center(d8).members(), oracle::center(oracle::table_of(d8)));
  EXPECT_EQ(center(d8).order(), 2u);
  EXPECT_TRUE(centralizer(d8, std::vector<Index>{}).is_whole());
}

TEST(Series, Examples) {
  auto s3 = derived_series(catalog::symmetric(3));
  ASSERT_EQ(s3.size(), 3u);
  EXPECT_EQ(s3[0].order(), 6u);
  EXPECT_EQ(s3[1].order(), 3u);
  EXPECT_TRUE(s3[2].is_trivial());
  auto a5 = derived_series(catalog::alternating(5));
  ASSERT_EQ(a5.size(), 2u);
  EXPECT_TRUE(a5[0].is_whole() && a5[1].is_whole());
  FiniteGroup m3 = catalog::heisenberg3();
  auto lcs = lower_central_series(m3);
  ASSERT_EQ(lcs.size(), 3u);
  EXPECT_EQ(lcs[1].members(), oracle::center(oracle::table_of(m3)));
  EXPECT_EQ(lcs[1].order(), 3u);
  EXPECT_TRUE(lcs[2].is_trivial());
}

TEST(Series, NilpotentImpliesSolvableOnCatalog) {
  for (auto const& expr : catalog_exprs()) {
    FiniteGroup g = parse_group(expr);
    if (is_nilpotent(g)) {
      EXPECT_TRUE(is_solvable(g)) << expr;
    }
    if (g.is_abelian()) {
      EXPECT_TRUE(is_nilpotent(g)) << expr;
    }
  }
}

TEST(Supersolvable, Examples) {
  EXPECT_TRUE(is_supersolvable(catalog::symmetric(3)));
  EXPECT_FALSE(is_supersolvable(catalog::alternating(4)));
  EXPECT_TRUE(is_supersolvable(parse_group("D8xF21")));
}

TEST(Supersolvable, A4HasNoPrimeOrderNormalSubgroup) {
  auto t = oracle::table_of(catalog::alternating(4));
  for (auto const& h : oracle::subgroups_by_generators(t, 2)) {
    bool prime = h.size() == 2 || h.size() == 3;
    if (prime) {
      EXPECT_FALSE(oracle::is_normal(t, h));
    }
  }
}

TEST(MinimalNormal, Examples) {
  auto a5 = minimal_normal_subgroups(catalog::alternating(5));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_TRUE(a5[0].is_whole());

  FiniteGroup sq = parse_group("A5xA5");
  auto mins = minimal_normal_subgroups(sq);
  ASSERT_EQ(mins.size(), 2u);
  std::vector<Index> left, right;
  for (Index a = 0; a < 60; ++a) {
    left.push_back(a * 60);
    right.push_back(a);
  }
  std::sort(left.begin(), left.end());
  EXPECT_TRUE((mins[0].members() == right && mins[1].members() == left) ||
              (mins[0].members() == left && mins[1].members() == right));

  FiniteGroup s4 = catalog::symmetric(4);
  auto t = oracle::table_of(s4);
  auto s4min = minimal_normal_subgroups(s4);
  ASSERT_EQ(s4min.size(), 1u);
  EXPECT_EQ(s4min[0].order(), 4u);
  EXPECT_TRUE(oracle::is_normal(t, s4min[0].members()));
}

TEST(CharacteristicallySimple, Examples) {
  FiniteGroup c33 = parse_group("C3^3");
  EXPECT_TRUE(is_characteristically_simple(c33));
  EXPECT_FALSE(is_simple(c33));
  EXPECT_TRUE(is_characteristically_simple(parse_group("A5xA5")));
  EXPECT_FALSE(is_characteristically_simple(parse_group("C4xC2")));
}

TEST(CharacteristicallySimple, C4xC2HasCharacteristicC2) {
  FiniteGroup g = parse_group("C4xC2");
  auto t = oracle::table_of(g);
  auto autos = oracle::automorphisms(t);
  bool found = false;
  for (auto const& h : oracle::subgroups_by_generators(t, 2)) {
    if (h.size() == 1 || h.size() == g.order()) continue;
    bool invariant = true;
    for (auto const& phi : autos)
      for (Index x : h) invariant = invariant && std::binary_search(h.begin(), h.end(), phi[x]);
    found = found || invariant;
  }
  EXPECT_TRUE(found);
}

TEST(Quotient, Examples) {
  FiniteGroup s3 = catalog::symmetric(3);
  Subgroup a3 = normal_closure(s3, std::vector<Index>{find_with_order(s3, 3)});
  Quotient q = quotient_group(s3, a3);
  EXPECT_EQ(q.group.order(), 2u);
  EXPECT_EQ(q.projection.kernel().members(), a3.members());

  FiniteGroup d8 = catalog::dihedral(8);
  Quotient same = quotient_group(d8, Subgroup::trivial(d8));
  EXPECT_TRUE(are_isomorphic(same.group, d8));
  Quotient one = quotient_group(d8, Subgroup::whole(d8));
  EXPECT_EQ(one.group.order(), 1u);
}

TEST(Quotient, KernelEqualsNormalSubgroup) {
  FiniteGroup g = catalog::symmetric(4);
  for (auto const& h : all_subgroups(g)) {
    if (!is_normal(h)) continue;
    Quotient q = quotient_group(g, h);
    EXPECT_EQ(q.projection.kernel().members(), h.members());
    EXPECT_TRUE(q.projection.verify().ok);
    EXPECT_EQ(q.group.order() * h.order(), g.order());
  }
}

TEST(DirectProduct, Examples) {
  FiniteGroup c6 = direct_product(catalog::cyclic(2), catalog::cyclic(3));
  EXPECT_EQ(c6.order(), 6u);
  EXPECT_TRUE(c6.is_abelian());
  EXPECT_EQ(parse_group("A5xA5").order(), 3600u);
  EXPECT_EQ(parse_group("PSL2(7)^2").order(), 28224u);
}

TEST(DirectProduct, ProjectionsAreHomomorphisms) {
  FiniteGroup a = catalog::symmetric(3), b = catalog::dihedral(8);
  FiniteGroup p = direct_product(a, b);
  auto pr = product_projections(a, b, p);
  EXPECT_TRUE(pr.left.verify().ok);
  EXPECT_TRUE(pr.right.verify().ok);
  EXPECT_EQ(pr.left.kernel().order(), b.order());
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(are_isomorphic(parse_group("C2^2"), catalog::cyclic(4)));
  FiniteGroup s4 = catalog::symmetric(4);
  auto iso = find_isomorphism(s4, s4);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(iso->verify().ok);
  EXPECT_TRUE(iso->is_bijective());
}

TEST(Isomorphism, AgreesWithBruteForceOnOrderEight) {
  std::vector<std::string> eight = {"C8", "C4xC2", "C2^3", "D8", "Q8"};
  for (auto const& a : eight)
    for (auto const& b : eight) {
      auto ta = oracle::table_of(parse_group(a)), tb = oracle::table_of(parse_group(b));
      EXPECT_EQ(are_isomorphic(parse_group(a), parse_group(b)), oracle::isomorphic(ta, tb))
          << a << " " << b;
    }
}

TEST(Isomorphism, ReflexiveSymmetricWithValidWitness) {
  auto exprs = catalog_exprs();
  for (auto const& a : exprs)
    for (auto const& b : exprs) {
      FiniteGroup g = parse_group(a), h = parse_group(b);
      if (g.order() != h.order()) continue;
      auto f = find_isomorphism(g, h);
      EXPECT_EQ(f.has_value(), find_isomorphism(h, g).has_value()) << a << " " << b;
      if (a == b) {
        EXPECT_TRUE(f.has_value()) << a;
      }
      if (f) {
        EXPECT_TRUE(f->verify().ok);
        EXPECT_TRUE(f->is_bijective());
      }
    }
}

TEST(Automorphisms, Examples) {
  FiniteGroup c9 = automorphism_group(catalog::cyclic(9));
  EXPECT_EQ(c9.order(), 6u);
  EXPECT_TRUE(c9.is_abelian());
  EXPECT_EQ(find_with_order(c9, 6) != 0, true);
  FiniteGroup k = automorphism_group(parse_group("C2^2"));
  EXPECT_EQ(k.order(), 6u);
  EXPECT_FALSE(k.is_abelian());
  EXPECT_EQ(automorphism_group(catalog::cyclic(2)).order(), 1u);
}

TEST(Automorphisms, CountsMatchBruteForce) {
  for (std::string expr : {"C2^2", "C6", "S3", "C4xC2", "D8", "Q8", "C2^3", "C9"}) {
    FiniteGroup g = parse_group(expr);
    auto brute = oracle::automorphisms(oracle::table_of(g));
    auto mine = all_automorphisms(g);
    EXPECT_EQ(mine.size(), brute.size()) << expr;
    std::sort(brute.begin(), brute.end());
    std::sort(mine.begin(), mine.end());
    EXPECT_EQ(mine, brute) << expr;
  }
}

TEST(Automorphisms, InnerAutomorphismsDivideOrder) {
  for (auto const& expr : catalog_exprs()) {
    FiniteGroup g = parse_group(expr);
    if (g.order() > default_limits().aut_cap) continue;
    Index inner = g.order() / center(g).order();
    EXPECT_EQ(automorphism_group(g).order() % inner, 0u) << expr;
  }
}

TEST(AllSubgroups, Examples) {
  auto s3 = all_subgroups(catalog::symmetric(3));
  EXPECT_EQ(s3.size(), 6u);
  for (Index p : {2u, 3u, 5u, 7u, 11u}) EXPECT_EQ(all_subgroups(catalog::cyclic(p)).size(), 2u);
}

TEST(AllSubgroups, MatchOracleEnumeration) {
  struct Case {
    std::string expr;
    int gens;
  };
  for (auto const& c : std::vector<Case>{{"S3", 2}, {"S4", 2}, {"A4", 2}, {"D8", 2},
                                         {"Q8", 2}, {"C2^3", 3}, {"GL2(3)", 3}, {"PSL2(7)", 2}}) {
    FiniteGroup g = parse_group(c.expr);
    auto oracle_set = oracle::subgroups_by_generators(oracle::table_of(g), c.gens);
    auto mine = all_subgroups(g);
    std::set<oracle::Set> mine_set;
    for (auto const& h : mine) {
      EXPECT_TRUE(h.satisfies_invariants());
      EXPECT_EQ(g.order() % h.order(), 0u);
      mine_set.insert(h.members());
    }
    EXPECT_EQ(mine_set, oracle_set) << c.expr;
    EXPECT_EQ(mine.size(), mine_set.size()) << c.expr;
  }
}

TEST(AllSubgroups, StableAcrossRuns) {
  auto a = all_subgroups(catalog::gl2_3());
  auto b = all_subgroups(catalog::gl2_3());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].members(), b[i].members());
}

TEST(Sylow, Examples) {
  FiniteGroup g = catalog::psl2(7);
  EXPECT_EQ(sylow_subgroup(g, 3).order(), 3u);
  EXPECT_EQ(sylow_subgroup(g, 2).order(), 8u);
  EXPECT_EQ(sylow_subgroup(g, 7).order(), 7u);
  EXPECT_TRUE(sylow_subgroup(catalog::cyclic(6), 5).is_trivial());
  EXPECT_THROW(sylow_subgroup(g, 4), InvalidArgument);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(catalog::alternating(5)), ClassificationLabel::simp);
  EXPECT_EQ(classify(parse_group("A4xC5xA5")), ClassificationLabel::mixed);
  auto const& meta = catalog_metadata("M11xA7");
  EXPECT_TRUE(meta.metadata_only);
  EXPECT_EQ(meta.expected_label, ClassificationLabel::perfect);
}

TEST(Classify, LabelsRoundTrip) {
  for (auto l : {ClassificationLabel::ab, ClassificationLabel::nil, ClassificationLabel::ssolv,
                 ClassificationLabel::solv, ClassificationLabel::simp, ClassificationLabel::chsimp,
                 ClassificationLabel::perfect, ClassificationLabel::mixed})
    EXPECT_EQ(label_from_string(to_string(l)), l);
  EXPECT_THROW(label_from_string("nope"), InvalidArgument);
}
