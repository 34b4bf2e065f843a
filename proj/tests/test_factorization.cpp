#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "support.hpp"

using namespace tetra;
using namespace support;

TEST(GaussBorel, SymmetricExample) {
  auto f = gauss_borel(t_sym(), 2);
  EXPECT_EQ(f.delta, (std::vector<Q>{Q(2), Q(3), Q(5)}));
  EXPECT_EQ(f.u_diag, (std::vector<Q>{Q(2), Q(3, 2), Q(5, 3)}));
  EXPECT_EQ(f.m, (std::vector<Q>{Q(1, 2), Q(1, 3)}));
  EXPECT_EQ(f.ell, (std::vector<Q>{Q(1, 2)}));
  EXPECT_EQ(f.lower() * f.upper(), dense({{2, 1, 0}, {1, 2, 1}, {1, 1, 2}}));
}

TEST(GaussBorel, AllOnesHasUnitMinors) {
  auto f = gauss_borel(t_one(), 2);
  EXPECT_EQ(f.delta, (std::vector<Q>{Q(1), Q(1), Q(1)}));
  EXPECT_EQ(f.u_diag, (std::vector<Q>{Q(1), Q(1), Q(1)}));
}

TEST(GaussBorel, SingularLeadingMinor) {
  auto t = bands({Q(1)}, {Q(1), Q(1)}, {Q(0), Q(2), Q(2)});
  try {
    gauss_borel(t, 2);
    FAIL();
  } catch (const SingularLeadingMinor& e) {
    EXPECT_EQ(e.n(), 0);
  }
}

TEST(BidiagonalFactor, AllOnesRoundTrip) {
  auto al = bidiagonal_factor(t_one(), 3, Q(1));
  for (Index j = 1; j <= 10; ++j) EXPECT_EQ(al(j), 1) << j;
}

TEST(BidiagonalFactor, SymmetricWithZeroAlpha2) {
  auto al = bidiagonal_factor(t_sym(), 2, Q(0));
  EXPECT_EQ(al.first(7), (std::vector<Q>{Q(2), Q(0), Q(1, 2), Q(3, 2), Q(1), Q(-2, 3), Q(5, 3)}));
  EXPECT_EQ(is_pbf(al, 7), Positivity::INDEFINITE);
}

TEST(BidiagonalFactor, InadmissibleAlpha2) {
  try {
    bidiagonal_factor(t_sym(), 2, Q(1, 2));
    FAIL();
  } catch (const ZeroAlpha3n& e) {
    EXPECT_EQ(e.n(), 1);
  }
}

TEST(IsPbf, Examples) {
  EXPECT_EQ(is_pbf(ones(), 10), Positivity::PBF);
  EXPECT_EQ(is_pbf(alphas({Q(1, 2), Q(0), Q(1, 6), Q(2, 15), Q(1, 5), Q(1, 14)}), 6), Positivity::TN);
  EXPECT_EQ(is_pbf(alphas({Q(1, 2), Q(-1, 6), Q(1, 3), Q(2, 15), Q(1, 10), Q(6, 35)}), 6), Positivity::INDEFINITE);
  EXPECT_THROW(is_pbf(ones(), 0), PreconditionViolation);
}

class FactorProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{202};
  std::vector<Q> draw(Index n) { return gen::pbf_alphas(rng, static_cast<std::size_t>(3 * n + 1)); }
};

TEST_F(FactorProperty, RoundTripRecoversAlphas) {
  for (int trial = 0; trial < 30; ++trial) {
    Index n = 1 + trial % 10;
    auto al = draw(n);
    auto t = tetra_from_alphas(alphas(al));
    auto back = bidiagonal_factor(t, n, al[1]);
    EXPECT_EQ(back.first(3 * n + 1), al) << "trial " << trial;
  }
}

TEST_F(FactorProperty, BandsSurviveAnyAdmissibleAlpha2) {
  for (int trial = 0; trial < 30; ++trial) {
    Index n = 1 + trial % 8;
    auto t = tetra_from_alphas(alphas(draw(n)));
    Q alpha2 = gen::positive_in(rng, 2);
    try {
      auto back = bidiagonal_factor(t, n, alpha2);
      EXPECT_TRUE(bands_equal(tetra_from_alphas(back), t, n)) << "trial " << trial;
    } catch (const ZeroAlpha3n&) {
    }
  }
}

TEST_F(FactorProperty, DiagonalStrandIsMinorRatio) {
  for (int trial = 0; trial < 30; ++trial) {
    Index n = 1 + trial % 10;
    auto t = tetra_from_alphas(alphas(draw(n)));
    auto lu = gauss_borel(t, n);
    auto dense_t = to_oracle(leading_principal(t, n));
    for (Index k = 0; k <= n; ++k) {
      oracle::Mat lead(dense_t.begin(), dense_t.begin() + k + 1);
      for (auto& row : lead) row.resize(static_cast<std::size_t>(k + 1));
      EXPECT_EQ(lu.delta_at(k), oracle::det(lead));
      EXPECT_EQ(lu.u_diag[static_cast<std::size_t>(k)] * lu.delta_at(k - 1), lu.delta_at(k));
    }
    EXPECT_EQ(to_oracle(lu.lower() * lu.upper()), dense_t);
  }
}

TEST_F(FactorProperty, DiagonalStrandIgnoresAlpha2) {
  for (int trial = 0; trial < 20; ++trial) {
    Index n = 2 + trial % 6;
    auto t = tetra_from_alphas(alphas(draw(n)));
    try {
      auto x = bidiagonal_factor(t, n, Q(0));
      auto y = bidiagonal_factor(t, n, Q(1, 3));
      for (Index k = 0; k <= n; ++k) EXPECT_EQ(x(3 * k + 1), y(3 * k + 1));
      for (Index k = 1; k <= n; ++k) {
        EXPECT_EQ(induced_m(x, k), induced_m(y, k));
        if (k >= 2) EXPECT_EQ(induced_ell(x, k), induced_ell(y, k));
      }
    } catch (const ZeroAlpha3n&) {
    }
  }
}
