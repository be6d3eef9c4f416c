#include <gtest/gtest.h>

#include "brace_forge/core.hpp"
#include "brace_forge/numtheory.hpp"

using namespace brace_forge;
using nt::BigInt;
using nt::Valuation;

namespace {

// Counts factors of p by plain repeated division.
Valuation slow_vp(BigInt m, std::uint64_t p) {
  if (m == 0) return Valuation::infinity();
  if (m < 0) m = -m;
  std::uint64_t k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return Valuation::finite(k);
}

}  // namespace

TEST(Vp, Examples) {
  EXPECT_EQ(nt::vp(728, 7), Valuation::finite(1));
  EXPECT_TRUE(nt::vp(0, 5).is_infinite());
  EXPECT_EQ(nt::vp(49 * 6, 7), Valuation::finite(2));
  EXPECT_EQ(nt::vp(-16, 2), Valuation::finite(4));
  EXPECT_THROW(nt::vp(10, 6), InvalidArgument);
  EXPECT_THROW(nt::vp(10, 1), InvalidArgument);
}

TEST(Vp, MatchesSlowDivisionOnLargePowers) {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    BigInt x = boost::multiprecision::pow(BigInt(p), 300) * 13 * 17;
    EXPECT_EQ(nt::vp(x, p), slow_vp(x, p));
    EXPECT_EQ(nt::vp(x + 1, p), slow_vp(x + 1, p));
  }
}

TEST(Vp, MultiplicativeOnSeededPairs) {
  Rng rng(default_limits().seed);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t p = std::array<std::uint64_t, 4>{2, 3, 5, 7}[rng.below(4)];
    BigInt a = BigInt(rng.next()) * BigInt(rng.below(50) + 1);
    BigInt b = BigInt(rng.next() % 100000) * BigInt(p) * BigInt(p);
    ASSERT_EQ(nt::vp(a * b, p), nt::vp(a, p) + nt::vp(b, p));
  }
}

TEST(Legendre, Examples) {
  EXPECT_EQ(nt::legendre(10, 3), 4u);
  EXPECT_EQ(nt::legendre(0, 5), 0u);
  EXPECT_EQ(nt::legendre(6, 7), 0u);
  EXPECT_THROW(nt::legendre(6, 9), InvalidArgument);
}

TEST(Legendre, MatchesFactorialValuation) {
  for (std::uint64_t p : {2, 3, 7}) {
    BigInt f = 1;
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      f *= n;
      if (n % 7 == 0 || n > 1990) {
        ASSERT_EQ(nt::vp(f, p), Valuation::finite(nt::legendre(n, p)));
      }
    }
  }
}

TEST(Lte, Examples) {
  EXPECT_EQ(nt::lte(8, 1, 2, 7), Valuation::finite(1));
  EXPECT_EQ(nt::vp(63, 7), Valuation::finite(1));
  EXPECT_EQ(nt::lte(729, 1, 7, 7), Valuation::finite(2));
  EXPECT_EQ(nt::vp(boost::multiprecision::pow(BigInt(729), 7) - 1, 7), Valuation::finite(2));
  try {
    nt::lte(3, 1, 5, 7);
    FAIL();
  } catch (InvalidArgument const& e) {
    EXPECT_NE(std::string(e.what()).find("does not divide x - y"), std::string::npos);
  }
  EXPECT_THROW(nt::lte(3, 1, 2, 2), InvalidArgument);
  EXPECT_THROW(nt::lte(7, 14, 2, 7), InvalidArgument);
}

TEST(Lte, MatchesBigIntegerOracle) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23})
    for (int x = -50; x <= 50; ++x)
      for (int y = -50; y <= 50; ++y) {
        long q = static_cast<long>(p);
        if (x % q == 0 || y % q == 0 || (x - y) % q != 0 || x == y) continue;
        for (unsigned n = 1; n <= 20; ++n) {
          BigInt d = boost::multiprecision::pow(BigInt(x), n) - boost::multiprecision::pow(BigInt(y), n);
          ASSERT_EQ(nt::lte(x, y, n, p), slow_vp(d, p)) << x << " " << y << " " << n << " " << p;
        }
      }
}

TEST(ENumber, Examples) {
  EXPECT_EQ(nt::e_of_n(6), 1u);
  EXPECT_EQ(nt::e_of_n(5), 0u);
  EXPECT_EQ(nt::e_of_n(42), 8u);
  EXPECT_EQ(nt::sl_n_3_order(2), 24);
  EXPECT_EQ(nt::sl_n_3_order(3), 5616);
}

TEST(ENumber, ClosedFormAndBounds) {
  for (unsigned n = 1; n <= 200; ++n) {
    std::uint64_t e = nt::e_of_n(n);
    ASSERT_EQ(e, nt::e_of_n_direct(n)) << n;
    EXPECT_EQ(nt::vp(nt::sl_n_3_order(n), 7), Valuation::finite(e));
    EXPECT_LE(2 * e, 7 * n / 18) << n;
    EXPECT_LT(2 * e, n) << n;
  }
}

TEST(LemmaBound, Examples) {
  EXPECT_TRUE(nt::check_lemma_bound(36, 37));
  EXPECT_EQ(nt::e_of_n(36), 6u);
  EXPECT_TRUE(nt::check_lemma_bound(1, 1));
  for (unsigned n = 1; n <= 200; ++n)
    for (unsigned r = 1; r <= n + 1; ++r) ASSERT_TRUE(nt::check_lemma_bound(n, r));
  EXPECT_THROW(nt::check_lemma_bound(5, 0), InvalidArgument);
  EXPECT_THROW(nt::check_lemma_bound(5, 7), InvalidArgument);
}

TEST(Scan, DefaultBox) {
  nt::ScanResult r = nt::diophantine_scan();
  std::vector<nt::DiophantineSolution> want = {{3, 1, 2, 2}, {7, 1, 2, 3}, {31, 1, 2, 5},
                                               {127, 1, 2, 7}};
  EXPECT_EQ(r.solutions, want);
  for (auto const& s : r.solutions) {
    EXPECT_EQ(s.p % 2, 1u);
    EXPECT_EQ(s.f, 1u);
    EXPECT_EQ(s.n, 2u);
    BigInt lhs = boost::multiprecision::pow(BigInt(s.p), s.f * s.n) - 1;
    BigInt rhs = boost::multiprecision::pow(BigInt(2), s.t) * (boost::multiprecision::pow(BigInt(s.p), s.f) - 1);
    EXPECT_EQ(lhs, rhs);
  }
  bool note = false;
  for (auto const& n : r.notes) note = note || n.find("(3,1,2,2)") != std::string::npos;
  EXPECT_TRUE(note);
  EXPECT_EQ(r.box.p_max, 200u);
}

TEST(Scan, SmallBoxAgainstLiteralSearch) {
  nt::ScanBox box{40, 3, 5, 20};
  std::vector<nt::DiophantineSolution> brute;
  for (std::uint64_t p = 2; p <= box.p_max; ++p) {
    if (!nt::is_prime(p)) continue;
    for (unsigned f = 1; f <= box.f_max; ++f)
      for (unsigned n = 2; n <= box.n_max; ++n)
        for (unsigned t = 0; t <= box.t_max; ++t) {
          BigInt pf = boost::multiprecision::pow(BigInt(p), f);
          if (boost::multiprecision::pow(pf, n) - 1 == (BigInt(1) << t) * (pf - 1))
            brute.push_back({p, f, n, t});
        }
  }
  EXPECT_EQ(nt::diophantine_scan(box).solutions, brute);
}
