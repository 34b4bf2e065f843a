#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "support.hpp"

using namespace tetra;
using namespace support;

TEST(TetraFromBands, AcceptsAllOnesProduct) {
  auto t = bands({Q(1), Q(1)}, {Q(2), Q(3), Q(3)}, {Q(1), Q(3), Q(3), Q(3)});
  EXPECT_EQ(leading_principal(t, 3), leading_principal(t_one(), 3));
}

TEST(TetraFromBands, RejectsNonPositiveA) {
  EXPECT_THROW(bands({Q(1), Q(0)}, {Q(1), Q(1), Q(1)}, {Q(1), Q(1), Q(1), Q(1)}), NonPositiveSubSubDiagonal);
  try {
    bands({Q(-1)}, {Q(1), Q(1)}, {Q(1), Q(1), Q(1)});
    FAIL();
  } catch (const NonPositiveSubSubDiagonal& e) {
    EXPECT_EQ(e.n(), 2);
  }
}

TEST(TetraFromBands, SymmetricExample) {
  EXPECT_EQ(leading_principal(t_sym(), 2), dense({{2, 1, 0}, {1, 2, 1}, {1, 1, 2}}));
}

TEST(LeadingPrincipal, AllOnes) {
  EXPECT_EQ(leading_principal(t_one(), 2), dense({{1, 1, 0}, {2, 3, 1}, {1, 3, 3}}));
  EXPECT_EQ(leading_principal(t_one(), 0), dense({{1}}));
}

TEST(LeadingPrincipal, PastExplicitBandsThrows) {
  EXPECT_THROW(leading_principal(t_sym(), 3), BandExhausted);
  EXPECT_THROW(leading_principal(t_sym(), -1), IndexOutOfRange);
}

TEST(TrailingTruncation, Examples) {
  auto t = t_one();
  EXPECT_EQ(trailing_truncation(t, 2, 0), leading_principal(t, 2));
  EXPECT_EQ(trailing_truncation(t, 2, 3), dense({{1}}));
  EXPECT_EQ(trailing_truncation(t, 2, 1), dense({{3, 1}, {3, 3}}));
  EXPECT_THROW(trailing_truncation(t, 2, 4), IndexOutOfRange);
}

TEST(TetraFromAlphas, AllOnesBands) {
  auto t = t_one();
  EXPECT_EQ(t.c(0), 1);
  EXPECT_EQ(t.b(1), 2);
  for (Index n = 1; n < 8; ++n) EXPECT_EQ(t.c(n), 3);
  for (Index n = 2; n < 8; ++n) EXPECT_EQ(t.b(n), 3);
  for (Index n = 2; n < 8; ++n) EXPECT_EQ(t.a(n), 1);
}

TEST(TetraFromAlphas, JacobiPineiroFirstSet) {
  auto t = tetra_from_alphas(alphas({Q(1, 2), Q(0), Q(1, 6), Q(2, 15), Q(1, 5), Q(1, 14), Q(3, 14)}));
  EXPECT_EQ(t.c(0), Q(1, 2));
  EXPECT_EQ(t.b(1), Q(1, 12));
}

TEST(TetraFromAlphas, ZeroProductOnA2) {
  try {
    tetra_from_alphas(alphas({Q(1), Q(1), Q(0), Q(1), Q(1), Q(1), Q(1)}));
    FAIL();
  } catch (const NonPositiveSubSubDiagonal& e) {
    EXPECT_EQ(e.n(), 2);
  }
}

TEST(TetraFromAlphas, GeneratorRejectsLazily) {
  auto gen = AlphaSequence<Q>(Band<Q>::Generator([](Index j) { return j == 5 ? Q(-1) : Q(1); }));
  auto t = tetra_from_alphas(gen);
  EXPECT_EQ(t.c(0), 1);
  EXPECT_THROW(t.a(2), NonPositiveSubSubDiagonal);
}

TEST(TetraFromAlphas, ExplicitLengthLimitsRows) {
  auto t = tetra_from_alphas(alphas(std::vector<Q>(7, Q(1))));
  ASSERT_TRUE(t.last_row());
  EXPECT_EQ(*t.last_row(), 2);
}

TEST(Classification, Kinds) {
  EXPECT_EQ(ones().classify(10), Positivity::PBF);
  auto first = alphas({Q(1, 2), Q(0), Q(1, 6), Q(2, 15), Q(1, 5), Q(1, 14)});
  EXPECT_EQ(first.classify(6), Positivity::TN);
  EXPECT_EQ(first.classify(6, true), Positivity::PBF);
  EXPECT_EQ(alphas({Q(1, 2), Q(-1, 6), Q(1, 3)}).classify(3), Positivity::INDEFINITE);
}

TEST(CoreProperty, TruncationEqualsFactorProduct) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<Index> pick(0, 12);
    Index n = pick(rng);
    auto al = gen::pbf_alphas(rng, static_cast<std::size_t>(3 * n + 3));
    auto t = tetra_from_alphas(alphas(al));
    EXPECT_EQ(to_oracle(leading_principal(t, n)), oracle::factor_product(al, static_cast<std::size_t>(n)))
        << "trial " << trial << " N " << n;
  }
}

TEST(CoreProperty, TrailingTruncationIsShiftedLeading) {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 25; ++trial) {
    auto bd = gen::bands(rng, 9);
    auto t = bands(bd.a, bd.b, bd.c);
    std::uniform_int_distribution<Index> pick_n(0, 9);
    Index n = pick_n(rng);
    std::uniform_int_distribution<Index> pick_k(0, n);
    Index k = pick_k(rng);
    EXPECT_EQ(trailing_truncation(t, n, k), leading_principal(t.drop_leading(k), n - k));
  }
}
