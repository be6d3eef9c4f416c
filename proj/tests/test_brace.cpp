#include <gtest/gtest.h>

#include "brace_forge/brace.hpp"
#include "brace_forge/catalog.hpp"
#include "brace_forge/factorization.hpp"
#include "brace_forge/isomorphism.hpp"
#include "oracles.hpp"

using namespace brace_forge;

namespace {

std::vector<FiniteGroup> small_groups() {
  std::vector<FiniteGroup> out;
  for (std::string e : {"C6", "S3", "A4", "D8", "Q8", "C2^3", "C3xC9", "M3", "A5"})
    out.push_back(parse_group(e));
  return out;
}

SkewBrace b1() {
  auto fs = find_exact_factorizations(catalog::alternating(5), 12);
  return brace_from_factorization(fs.front());
}

std::vector<SkewBrace> sample_braces() {
  std::vector<SkewBrace> out;
  for (auto const& g : small_groups()) {
    out.push_back(triv(g));
    out.push_back(a_triv(g));
  }
  out.push_back(b1());
  auto fs = find_exact_factorizations(catalog::symmetric(3), 3);
  out.push_back(brace_from_factorization(fs.front()));
  return out;
}

}  // namespace

TEST(MakeBrace, Examples) {
  FiniteGroup c5 = catalog::cyclic(5);
  SkewBrace b = make_brace(c5, c5);
  EXPECT_TRUE(b.validation().ok);
  EXPECT_TRUE(b.validation().mode.exhaustive);
  EXPECT_TRUE(classify_brace(b).is_trivial);

  // C4 with the identity of the second table moved to index 1.
  std::vector<std::vector<Index>> add = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  std::vector<std::vector<Index>> mul = {{1, 2, 3, 0}, {0, 1, 2, 3}, {3, 0, 1, 2}, {2, 3, 0, 1}};
  EXPECT_THROW(make_brace_from_tables(add, mul), InvalidArgument);

  SkewBrace d = diagonal_brace(catalog::alternating(5));
  EXPECT_TRUE(d.validation().ok);
  EXPECT_FALSE(d.validation().mode.exhaustive);
  EXPECT_EQ(d.validation().mode.count, default_limits().sample_count);
}

TEST(MakeBrace, ViolationCarriesWitness) {
  // S3 additive with C6 multiplicative on the same labels is not a brace.
  FiniteGroup s3 = catalog::symmetric(3), c6 = catalog::cyclic(6);
  try {
    make_brace(s3, c6);
    FAIL() << "expected LawViolation";
  } catch (LawViolation const& e) {
    ASSERT_EQ(e.witness().size(), 3u);
    Index a = e.witness()[0], b = e.witness()[1], c = e.witness()[2];
    EXPECT_NE(c6.mul(a, s3.mul(b, c)),
              s3.mul(s3.mul(c6.mul(a, b), s3.inv(a)), c6.mul(a, c)));
  }
}

TEST(Lambda, Examples) {
  for (auto const& g : small_groups()) {
    SkewBrace t = triv(g);
    for (Index b = 0; b < g.order(); ++b) {
      auto l = t.lambda_map(b);
      for (Index a = 0; a < g.order(); ++a) EXPECT_EQ(l[a], a);
    }
    SkewBrace at = a_triv(g);
    for (Index b = 0; b < g.order(); b += 3)
      for (Index a = 0; a < g.order(); ++a)
        EXPECT_EQ(at.lambda(b, a), at.add(at.add(at.neg(b), a), b));
  }
  SkewBrace d = diagonal_brace(catalog::alternating(5));
  for (Index b : {1u, 61u, 1234u, 3599u}) {
    auto l = d.lambda_map(b);
    for (Index a = 0; a < d.order(); ++a)
      EXPECT_EQ(l[a], d.add_group().mul(d.add_group().inv(b), d.mul_group().mul(b, a)));
  }
}

TEST(Star, Examples) {
  for (auto const& g : small_groups()) {
    SkewBrace t = triv(g);
    for (Index a = 0; a < g.order(); ++a)
      for (Index b = 0; b < g.order(); ++b) {
        EXPECT_EQ(t.star(a, b), 0u);
        // -y + x + y - x, the additive commutator of y and -x.
        EXPECT_EQ(t.star_opp(a, b), g.commutator(b, g.inv(a)));
      }
  }
  for (auto const& b : sample_braces())
    for (Index x = 0; x < b.order(); ++x) EXPECT_EQ(b.star(0, x), 0u);
}

TEST(Opposite, Examples) {
  for (auto const& g : small_groups()) {
    SkewBrace o = opposite(triv(g));
    EXPECT_TRUE(classify_brace(o).is_almost_trivial);
    if (g.is_abelian()) {
      EXPECT_TRUE(opposite(triv(g)).add_group().equal_law(g));
    }
  }
  for (auto const& b : sample_braces()) {
    SkewBrace back = opposite(opposite(b));
    EXPECT_TRUE(back.add_group().equal_law(b.add_group()));
    EXPECT_TRUE(back.mul_group().equal_law(b.mul_group()));
  }
}

TEST(StarSpan, Examples) {
  SkewBrace t = triv(catalog::symmetric(4));
  std::vector<Index> all(24);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(star_span(t, all, all).is_trivial());
  SkewBrace b = b1();
  std::vector<Index> carrier(b.order());
  std::iota(carrier.begin(), carrier.end(), 0);
  std::vector<Index> zero = {0};
  EXPECT_TRUE(star_span(b, zero, carrier).is_trivial());
  EXPECT_TRUE(star_span(b, carrier, zero).is_trivial());
}

TEST(StarSpan, DiagonalMatchesPairScan) {
  SkewBrace d = diagonal_brace(catalog::alternating(5));
  Index n = d.order();
  std::vector<Index> carrier(n);
  std::iota(carrier.begin(), carrier.end(), 0);
  Subgroup span = star_span(d, carrier, carrier);
  std::vector<char> in(n, 0);
  std::vector<Index> stars;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      Index s = d.star(x, y);
      if (!in[s]) {
        in[s] = 1;
        stars.push_back(s);
      }
    }
  std::vector<Index> closed = stars;
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (Index g : stars) {
      Index z = d.add(closed[i], g);
      if (!in[z]) {
        in[z] = 1;
        closed.push_back(z);
      }
    }
  std::sort(closed.begin(), closed.end());
  EXPECT_EQ(span.members(), closed);
}

TEST(BSquared, Examples) {
  for (auto const& g : small_groups()) {
    EXPECT_TRUE(b_squared(triv(g), Side::plain).members.is_trivial());
    EXPECT_TRUE(b_squared(a_triv(g), Side::opp).members.is_trivial());
    Subgroup der = derived_subgroup(Subgroup::whole(g));
    EXPECT_EQ(b_squared(triv(g), Side::opp).members.members(), der.members());
  }
}

TEST(BSquared, QuotientIsTrivial) {
  for (auto const& b : sample_braces()) {
    BraceIdeal sq = b_squared(b, Side::plain);
    EXPECT_FALSE(sq.closure_fallback);
    QuotientBrace q = quotient_brace(b, sq.members);
    EXPECT_TRUE(classify_brace(q.brace).is_trivial);
    EXPECT_TRUE(q.star_compatible);
    BraceIdeal osq = b_squared(b, Side::opp);
    QuotientBrace oq = quotient_brace(b, osq.members);
    EXPECT_TRUE(classify_brace(oq.brace).is_almost_trivial);
  }
}

TEST(Ideal, Examples) {
  for (auto const& b : sample_braces()) {
    std::vector<Index> zero = {0};
    std::vector<Index> all(b.order());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(is_ideal(b, zero).ok);
    EXPECT_TRUE(is_ideal(b, all).ok);
    IdealVerdict k = is_ideal(b, kernel_lambda(b).members.members());
    EXPECT_TRUE(k.agree());
  }
  EXPECT_TRUE(kernel_lambda(b1()).normal_in_mul);
}

TEST(Ideal, CharacterizationsAgreeOnAllSubgroups) {
  for (auto const& b : sample_braces()) {
    if (b.order() > 60) continue;
    for (auto const& h : all_subgroups(b.add_group())) {
      IdealVerdict v = is_ideal(b, h.members());
      EXPECT_TRUE(v.agree()) << b.order() << " " << v.reason;
    }
  }
}

TEST(QuotientBrace, Examples) {
  SkewBrace b = b1();
  QuotientBrace whole = quotient_brace(b, Subgroup::trivial(b.add_group()));
  EXPECT_EQ(whole.brace.order(), b.order());
  EXPECT_TRUE(are_isomorphic(whole.brace.mul_group(), b.mul_group()));
  QuotientBrace one = quotient_brace(b, Subgroup::whole(b.add_group()));
  EXPECT_EQ(one.brace.order(), 1u);
  SkewBrace t = triv(catalog::symmetric(3));
  EXPECT_THROW(quotient_brace(b, Subgroup::trivial(t.add_group())), InvalidArgument);
}

TEST(ClassifyBrace, Examples) {
  for (auto const& g : small_groups()) {
    BraceFlags t = classify_brace(triv(g));
    EXPECT_TRUE(t.is_trivial);
    EXPECT_TRUE(t.is_two_sided);
    BraceFlags a = classify_brace(a_triv(g));
    EXPECT_TRUE(a.is_almost_trivial);
    EXPECT_TRUE(a.is_two_sided);
  }
  SkewBrace d = diagonal_brace(catalog::alternating(5));
  BraceFlags f = classify_brace(d);
  EXPECT_FALSE(f.is_trivial);
  EXPECT_FALSE(f.is_almost_trivial);
  ASSERT_EQ(f.not_trivial_witness.size(), 2u);
  Index x = f.not_trivial_witness[0], y = f.not_trivial_witness[1];
  EXPECT_NE(d.mul(x, y), d.add(x, y));
}

TEST(TrivialBraces, Examples) {
  SkewBrace t = triv(catalog::cyclic(6));
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) EXPECT_EQ(t.mul(a, b), t.add(a, b));
  SkewBrace at = a_triv(catalog::symmetric(3));
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) EXPECT_EQ(at.mul(a, b), at.add(b, a));
  FiniteGroup c33 = parse_group("C3^3");
  EXPECT_TRUE(a_triv(c33).add_group().equal_law(triv(c33).add_group()));
}

TEST(BraceProduct, Examples) {
  FiniteGroup s3 = catalog::symmetric(3), d8 = catalog::dihedral(8);
  SkewBrace p = brace_product(triv(s3), triv(d8));
  EXPECT_TRUE(classify_brace(p).is_trivial);
  EXPECT_TRUE(p.add_group().equal_law(direct_product(s3, d8)));
  SkewBrace bb = brace_product(b1(), b1());
  EXPECT_TRUE(are_isomorphic(bb.add_group(), parse_group("A5xA5")));
  SkewBrace one = triv(parse_group("1"));
  SkewBrace same = brace_product(b1(), one);
  EXPECT_TRUE(same.add_group().equal_law(b1().add_group()));
  EXPECT_TRUE(same.mul_group().equal_law(b1().mul_group()));
}

TEST(KernelLambda, Examples) {
  for (auto const& g : small_groups()) {
    EXPECT_TRUE(kernel_lambda(triv(g)).members.is_whole());
    if (!g.is_abelian()) {
      EXPECT_EQ(kernel_lambda(a_triv(g)).members.members(), center(g).members());
    }
  }
  SkewBrace d = diagonal_brace(catalog::alternating(5));
  LambdaKernel k = kernel_lambda(d);
  std::vector<Index> brute;
  for (Index b = 0; b < d.order(); ++b) {
    bool id = true;
    for (Index a = 0; a < d.order() && id; ++a) id = d.lambda(b, a) == a;
    if (id) brute.push_back(b);
  }
  EXPECT_EQ(k.members.members(), brute);
  EXPECT_TRUE(k.additive_subgroup && k.multiplicative_subgroup && k.normal_in_mul);
}

TEST(ProductForm, Examples) {
  FiniteGroup a5 = catalog::alternating(5);
  ProductFormReport at = check_two_sided_product_form(a_triv(a5));
  EXPECT_TRUE(at.ok);
  EXPECT_TRUE(at.add_mul_isomorphic);
  EXPECT_EQ(at.square_order, 60u);
  EXPECT_EQ(at.opp_square_order, 1u);
  ProductFormReport t = check_two_sided_product_form(triv(a5));
  EXPECT_TRUE(t.ok);
  EXPECT_EQ(t.square_order, 1u);
  EXPECT_EQ(t.opp_square_order, 60u);
  ProductFormReport both = check_two_sided_product_form(brace_product(a_triv(a5), triv(a5)));
  EXPECT_TRUE(both.ok);
  EXPECT_TRUE(both.add_mul_isomorphic);
  EXPECT_EQ(both.square_order, 60u);
  EXPECT_EQ(both.opp_square_order, 60u);
  EXPECT_THROW(check_two_sided_product_form(triv(catalog::symmetric(3))), InvalidArgument);
}

TEST(BraceProperties, RecoveryLambdaAndStarIdentities) {
  for (auto const& b : sample_braces()) {
    Index n = b.order();
    for (Index a = 0; a < n; ++a) {
      auto la = b.lambda_map(a);
      std::vector<Index> inv(n);
      for (Index x = 0; x < n; ++x) inv[la[x]] = x;
      for (Index x = 0; x < n; ++x) {
        EXPECT_EQ(b.add(a, x), b.mul(a, inv[x]));
        EXPECT_EQ(b.mul(a, x), b.add(a, la[x]));
        EXPECT_EQ(b.star(a, x), b.sub(la[x], x));
      }
    }
    SkewBrace op = opposite(b);
    for (Index a = 0; a < n; a += 2)
      for (Index x = 0; x < n; ++x) EXPECT_EQ(op.star(a, x), b.star_opp(a, x));
  }
}

TEST(BraceProperties, LambdaIsHomomorphismIntoAut) {
  for (auto const& b : sample_braces()) {
    Index n = b.order();
    if (n > 60) continue;
    for (Index a = 0; a < n; ++a)
      for (Index c = 0; c < n; ++c)
        for (Index x = 0; x < n; ++x) {
          ASSERT_EQ(b.lambda(b.mul(a, c), x), b.lambda(a, b.lambda(c, x)));
          ASSERT_EQ(b.lambda(a, b.add(c, x)), b.add(b.lambda(a, c), b.lambda(a, x)));
        }
  }
}

TEST(BraceProperties, TrivialAndAlmostTrivialAreTwoSidedOnCatalog) {
  for (auto const& e : catalog_entries()) {
    if (e.metadata_only || std::stoul(e.expected_order) > 400) continue;
    FiniteGroup g = build_entry(e);
    EXPECT_TRUE(classify_brace(triv(g)).is_two_sided) << e.name;
    EXPECT_TRUE(classify_brace(a_triv(g)).is_two_sided) << e.name;
  }
}
