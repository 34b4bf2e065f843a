#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "support.hpp"

using namespace tetra;
using namespace support;

namespace {

oracle::Mat drop_leading(const oracle::Mat& m, std::size_t k) {
  oracle::Mat out;
  for (std::size_t i = k; i < m.size(); ++i) out.emplace_back(m[i].begin() + static_cast<long>(k), m[i].end());
  return out;
}

}  // namespace

TEST(Type2, AllOnesCubic) {
  auto b = type2_sequence(t_one(), 3);
  EXPECT_EQ(b[3], poly({Q(-1), Q(10), Q(-7), Q(1)}));
  EXPECT_EQ(b[1], poly({Q(-1), Q(1)}));
}

TEST(Type2, SymmetricQuadratic) {
  auto b = type2_sequence(t_sym(), 2);
  EXPECT_EQ(b[2], poly({Q(3), Q(-4), Q(1)}));
  EXPECT_EQ(b[2](Q(2)), -1);
}

TEST(Type2, ValuesAtOrigin) {
  EXPECT_EQ(eval_sequence_at(type2_sequence(t_one(), 3), Q(0)), (std::vector<Q>{Q(1), Q(-1), Q(1), Q(-1)}));
}

TEST(Type1, AllOnesExamples) {
  auto [a1, a2] = type1_sequences(t_one(), 3, Q(-1));
  EXPECT_EQ(a1[2], poly({Q(1), Q(1)}));
  EXPECT_EQ(a2[2], poly({Q(-2)}));
  EXPECT_EQ(a2[3], poly({Q(3), Q(1)}));
  EXPECT_EQ(a1[0], poly({Q(1)}));
  EXPECT_EQ(a1[1], poly({Q(-1)}));
  EXPECT_TRUE(a2[0].is_zero());
}

TEST(Type1, ZeroNuRejected) {
  EXPECT_THROW(type1_sequences(t_one(), 3, Q(0)), ZeroNu);
  EXPECT_THROW(second_kind_sequences(t_one(), 3, Q(0)), ZeroNu);
}

TEST(CharPolyTruncation, Examples) {
  auto t = t_one();
  EXPECT_EQ(char_poly_truncation(t, 2, 0), poly({Q(-1), Q(10), Q(-7), Q(1)}));
  EXPECT_EQ(char_poly_truncation(t, 2, 1), poly({Q(6), Q(-6), Q(1)}));
  EXPECT_EQ(char_poly_truncation(t, 4, 4), poly({Q(-3), Q(1)}));
  EXPECT_EQ(char_poly_truncation(t, 4, 5), poly({Q(1)}));
  EXPECT_THROW(char_poly_truncation(t, 4, 6), IndexOutOfRange);
}

TEST(CharPolyDense, MatchesFaddeevLeVerrier) {
  auto m = dense({{2, 1, 0}, {1, 2, 1}, {1, 1, 2}});
  EXPECT_TRUE(same(char_poly_dense(m), oracle::charpoly(to_oracle(m))));
}

class PolyProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{303};
  TetraHessenberg<Q> draw(Index n) {
    auto b = gen::bands(rng, n + 1);
    return bands(b.a, b.b, b.c);
  }
};

TEST_F(PolyProperty, Type2IsCharacteristicPolynomial) {
  for (Index n = 0; n <= 10; ++n) {
    auto t = draw(n);
    auto b = type2_sequence(t, n + 1);
    auto oracle_poly = oracle::charpoly(to_oracle(leading_principal(t, n)));
    EXPECT_TRUE(same(b[n + 1], oracle_poly)) << "N " << n;
    EXPECT_EQ(char_poly_truncation(t, n, 0), b[n + 1]);
  }
}

TEST_F(PolyProperty, MonicOfExactDegree) {
  auto b = type2_sequence(draw(10), 10);
  for (Index n = 0; n <= 10; ++n) {
    EXPECT_EQ(b[n].degree(), n);
    EXPECT_EQ(b[n].leading(), 1);
  }
}

TEST_F(PolyProperty, SecondKindAreTrailingCharacteristicPolynomials) {
  for (Q nu : {Q(-1), Q(2), Q(-1, 3)}) {
    for (Index n = 1; n <= 9; ++n) {
      auto t = draw(n);
      auto [b1, b2, small] = second_kind_sequences(t, n + 1, nu);
      auto full = to_oracle(leading_principal(t, n));
      EXPECT_TRUE(same(b1[n + 1], oracle::charpoly(drop_leading(full, 1)))) << "N " << n;
      EXPECT_TRUE(same(small[n + 1], oracle::charpoly(drop_leading(full, 2)))) << "N " << n;
      EXPECT_EQ(b2[n + 1], small[n + 1] - nu * b1[n + 1]);
    }
  }
}

TEST_F(PolyProperty, Type1AreLeftEigenvectors) {
  for (Q nu : {Q(-1), Q(3, 2)}) {
    const Index n = 8;
    auto t = draw(n);
    auto [a1, a2] = type1_sequences(t, n, nu);
    for (const auto* seq : {&a1, &a2}) {
      const auto& a = *seq;
      for (Index j = 0; j + 2 <= n; ++j) {
        auto column = t.c(j) * a[j] + t.b(j + 1) * a[j + 1] + t.a(j + 2) * a[j + 2];
        if (j >= 1) column += a[j - 1];
        EXPECT_EQ(column, Polynomial<Q>::x() * a[j]) << "row " << j;
      }
    }
  }
}
