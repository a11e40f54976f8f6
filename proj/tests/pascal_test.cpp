#include "pascalfib/core.hpp"
#include "pascalfib/pascal.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

using namespace pascalfib;

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_THROW(binomial(-1, 0), std::invalid_argument);
}

TEST(Binomial, MatchesMultiplicativeFormula) {
  for (std::int64_t a = 0; a <= 80; ++a)
    for (std::int64_t b = -2; b <= a + 2; ++b) ASSERT_EQ(binomial(a, b), oracle::binomial(a, b)) << a << " " << b;
}

TEST(BinomialCache, ConcurrentGrowthIsConsistent) {
  BinomialCache cache;
  std::vector<std::jthread> pool;
  std::vector<BigInt> got(8);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] { got[t] = cache.get(100 + 10 * t, 50); });
  pool.clear();
  for (int t = 0; t < 8; ++t) EXPECT_EQ(got[t], oracle::binomial(100 + 10 * t, 50));
  EXPECT_EQ(cache.rows_cached(), 171u);
}

TEST(BuildLeft, Examples) {
  EXPECT_EQ(build_left(1), ExactMatrix::from_rows({{1}}));
  EXPECT_EQ(build_left(3), ExactMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}}));
  EXPECT_TRUE(mat_mod(mat_pow(build_left(2), 2), 2).is_identity());
}

TEST(BuildRight, Examples) {
  EXPECT_EQ(build_right(2), ExactMatrix::from_rows({{0, 1}, {1, 1}}));
  EXPECT_EQ(build_right(3), ExactMatrix::from_rows({{0, 0, 1}, {0, 1, 1}, {1, 2, 1}}));
}

TEST(BuildRight, IsLeftWithColumnsReversed) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const ExactMatrix l = build_left(n), r = build_right(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) ASSERT_EQ(r(i, j), l(i, n + 1 - j));
  }
}

// a_{i,j-1} = a_{i-1,j-1} + a_{i-1,j} on the interior, with a_{i,n+1} = 0.
TEST(BuildRight, SatisfiesTableauRecurrence) {
  for (std::size_t n = 2; n <= 15; ++n) {
    const ExactMatrix r = build_right(n);
    auto a = [&](std::size_t i, std::size_t j) -> BigInt { return j <= n ? r(i, j) : BigInt(0); };
    for (std::size_t i = 2; i <= n; ++i)
      for (std::size_t j = 2; j <= n + 1; ++j) ASSERT_EQ(a(i, j - 1), a(i - 1, j - 1) + a(i - 1, j)) << n;
  }
}

TEST(LeftPowerEntry, Examples) {
  EXPECT_EQ(left_power_entry(3, 4, 2), 27);
  EXPECT_EQ(mat_pow(build_left(4), 3)(4, 2), 27);
  for (std::int64_t e = -5; e <= 5; ++e) EXPECT_EQ(left_power_entry(e, 3, 3), 1);
  EXPECT_EQ(left_power_entry(-1, 3, 1), 1);
  EXPECT_EQ(left_power_entry(0, 3, 1), 0);
  EXPECT_EQ(left_power_entry(5, 2, 3), 0);
}

TEST(LeftPowerEntry, MatchesBruteForcePowers) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const ExactMatrix l = build_left(n);
    for (std::int64_t e = -3; e <= 10; ++e) {
      const ExactMatrix power = e >= 0 ? oracle::power(l, unsigned(e)) : oracle::power(left_inverse(n), unsigned(-e));
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) ASSERT_EQ(power(i, j), left_power_entry(e, i, j)) << n << " " << e;
    }
  }
}

TEST(LeftPowerEntry, MinusOneIsTheInverse) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const ExactMatrix inv = left_inverse(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) ASSERT_EQ(inv(i, j), left_power_entry(-1, i, j));
  }
}

TEST(Inverses, Examples) {
  EXPECT_EQ(left_inverse(3), ExactMatrix::from_rows({{1, 0, 0}, {-1, 1, 0}, {1, -2, 1}}));
  EXPECT_EQ(right_inverse(2), ExactMatrix::from_rows({{-1, 1}, {1, 0}}));
  EXPECT_TRUE(mat_mul(build_right(5), right_inverse(5)).is_identity());
}

TEST(Inverses, AgreeWithGenericInverse) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(left_inverse(n), unimodular_inverse(build_left(n)));
    EXPECT_EQ(right_inverse(n), unimodular_inverse(build_right(n)));
  }
}

TEST(Inverses, TwoSidedUpTo32) {
  for (std::size_t n = 1; n <= 32; ++n) {
    EXPECT_TRUE(mat_mul(build_left(n), left_inverse(n)).is_identity());
    EXPECT_TRUE(mat_mul(left_inverse(n), build_left(n)).is_identity());
    EXPECT_TRUE(mat_mul(build_right(n), right_inverse(n)).is_identity());
    EXPECT_TRUE(mat_mul(right_inverse(n), build_right(n)).is_identity());
  }
}

TEST(Mod2, IdentitiesHoldUpTo64) {
  for (std::size_t n = 2; n <= 64; ++n) {
    EXPECT_TRUE(mat_mod(mat_pow(build_left(n), 2), 2).is_identity()) << n;
    EXPECT_TRUE(mat_mod(mat_pow(build_right(n), 3), 2).is_identity()) << n;
  }
}
