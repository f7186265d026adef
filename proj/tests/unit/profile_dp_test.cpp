#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "lambdakit/enumerator.hpp"
#include "lambdakit/error.hpp"
#include "lambdakit/formulas.hpp"
#include "lambdakit/profile_dp.hpp"

namespace lambdakit {
namespace {

TEST(DpCount, Examples) {
  EXPECT_EQ(dp_count(4, 2), 90);
  EXPECT_EQ(dp_count(6, 3), count_lambda(6, 3));
  EXPECT_EQ(dp_count(1, 2), 0);
  EXPECT_EQ(dp_count(0, 0), 1);
  // Reference value from an independent profile count.
  EXPECT_EQ(dp_count(12, 6), Count{"64051375889927380035549804336"});
  EXPECT_EQ(dp_count(8, 4), Count{"116963796250"});
}

TEST(DpCount, TrivialCornersToTwenty) {
  for (std::size_t n = 0; n <= 20; ++n) {
    EXPECT_EQ(dp_count(n, 0), 1) << n;
    EXPECT_EQ(dp_count(n, n), 1) << n;
  }
}

TEST(DpCount, PermutationsToTwenty) {
  for (std::size_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(dp_count(n, 1), factorial(static_cast<std::uint32_t>(n))) << n;
  }
}

TEST(DpCount, MatchesEnumerationToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(dp_count(n, k), count_lambda(n, k)) << n << "," << k;
  }
}

TEST(DpCount, ComplementSymmetryToTwelve) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(dp_count(n, k), dp_count(n, n - k)) << n << "," << k;
  }
}

TEST(DpCount, MatchesLambda2FormulasToForty) {
  for (std::size_t n = 1; n <= 40; ++n) {
    const Count dp = dp_count(n, 2);
    EXPECT_EQ(dp, lambda2_good(n));
    EXPECT_EQ(dp, lambda2_anand(n));
    EXPECT_EQ(dp, lambda2_partition_sum(n));
    EXPECT_EQ(dp, lambda2_system(n).lambda);
  }
}

TEST(DpCount, MatchesLambda3ExplicitToTwentyFive) {
  for (std::size_t n = 3; n <= 25; ++n) EXPECT_EQ(dp_count(n, 3), lambda3_explicit(n)) << n;
}

TEST(DpTable, Examples) {
  using Table = std::vector<std::pair<std::size_t, Count>>;
  EXPECT_EQ(dp_table(2, 5), (Table{{2, 1}, {3, 6}, {4, 90}, {5, 2040}}));
  EXPECT_EQ(dp_table(1, 4), (Table{{1, 1}, {2, 2}, {3, 6}, {4, 24}}));
  EXPECT_EQ(dp_table(0, 3), (Table{{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  EXPECT_TRUE(dp_table(4, 3).empty());
}

TEST(DeficitProfile, FromDeficits) {
  const DeficitProfile p = profile_from_deficits({2, 0, 1, 2, 2}, 2);
  EXPECT_EQ(p.counts, (std::vector<std::size_t>{1, 1, 3}));
  EXPECT_THROW(profile_from_deficits({3}, 2), Error);
}

TEST(DpCountFrom, InfeasibleAndFinished) {
  EXPECT_EQ(dp_count_from(profile_from_deficits({0, 0, 0}, 2), 2), 1);
  // Outstanding ones not a multiple of k.
  EXPECT_EQ(dp_count_from(profile_from_deficits({1, 0, 0}, 2), 2), 0);
  // One row left but a column needs two ones.
  EXPECT_EQ(dp_count_from(profile_from_deficits({2, 0, 0}, 2), 2), 0);
}

// Fixing the first r rows of a matrix and shuffling column labels must not
// change the number of completions; the search counts them directly.
TEST(DpCountFrom, ColumnShuffleMetamorphic) {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<BinaryMatrix> all;
      enumerate_lambda(n, k, [&](const BinaryMatrix& m) { all.push_back(m); });
      for (int trial = 0; trial < 20; ++trial) {
        const BinaryMatrix& base = all[rng() % all.size()];
        const std::size_t fixed_rows = rng() % n;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<RowBits> prefix(fixed_rows, 0);
        std::vector<std::size_t> deficits(n, k);
        for (std::size_t i = 0; i < fixed_rows; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (base.at(i, j)) {
              prefix[i] |= RowBits{1} << perm[j];
              --deficits[perm[j]];
            }
          }
        }
        std::size_t completions = 0;
        for (const auto& m : all) {
          bool match = true;
          for (std::size_t i = 0; i < fixed_rows && match; ++i) match = m.row(i) == prefix[i];
          completions += match ? 1 : 0;
        }
        EXPECT_EQ(dp_count_from(profile_from_deficits(deficits, k), k), completions)
            << "n=" << n << " k=" << k << " rows=" << fixed_rows;
      }
    }
  }
}

}  // namespace
}  // namespace lambdakit
