#include <algorithm>
#include <mutex>
#include <set>

#include <gtest/gtest.h>

#include "lambdakit/enumerator.hpp"
#include "lambdakit/error.hpp"
#include "support/oracles.hpp"

namespace lambdakit {
namespace {

std::vector<BinaryMatrix> collect(std::size_t n, std::size_t k) {
  std::vector<BinaryMatrix> out;
  enumerate_lambda(n, k, [&](const BinaryMatrix& m) { out.push_back(m); });
  return out;
}

/// Row-by-row key whose lexicographic order is the documented visit order.
std::vector<std::vector<std::size_t>> order_key(const BinaryMatrix& m) {
  std::vector<std::vector<std::size_t>> key;
  for (std::size_t i = 0; i < m.n(); ++i) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (m.at(i, j)) cols.push_back(j);
    }
    key.push_back(cols);
  }
  return key;
}

std::vector<BinaryMatrix> sorted(std::vector<BinaryMatrix> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(EnumerateLambda, Examples) {
  const auto two_two = collect(2, 2);
  ASSERT_EQ(two_two.size(), 1U);
  EXPECT_EQ(two_two[0], BinaryMatrix::all_ones(2));

  const auto perms = collect(3, 1);
  ASSERT_EQ(perms.size(), 6U);
  for (const auto& p : perms) EXPECT_TRUE(is_lambda(p, 1));
  EXPECT_EQ(perms.front(), BinaryMatrix::identity(3));

  EXPECT_EQ(enumerate_lambda(4, 2, [](const BinaryMatrix&) {}), 90);
}

TEST(EnumerateLambda, ZeroOnesGivesTheZeroMatrix) {
  const auto zero = collect(4, 0);
  ASSERT_EQ(zero.size(), 1U);
  EXPECT_EQ(zero[0], BinaryMatrix(4));
}

TEST(EnumerateLambda, KAboveNIsEmpty) {
  EXPECT_EQ(collect(1, 2).size(), 0U);
  EXPECT_EQ(count_lambda(1, 2), 0);
  EXPECT_EQ(count_split(2, 5), (SplitCount{0, 0}));
}

TEST(EnumerateLambda, RejectsBadDimension) {
  EXPECT_THROW(enumerate_lambda(0, 0, [](const BinaryMatrix&) {}), Error);
  EXPECT_THROW(count_lambda(65, 1), Error);
}

TEST(EnumerateLambda, LexicographicOrderAndDeterminism) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto first = collect(n, k);
      EXPECT_EQ(first, collect(n, k));
      for (std::size_t i = 1; i < first.size(); ++i) {
        EXPECT_LT(order_key(first[i - 1]), order_key(first[i])) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(EnumerateLambda, MatchesExhaustiveFilterUpToFour) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(sorted(collect(n, k)), sorted(oracle::exhaustive_filter(n, k)))
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(EnumerateLambda, MatchesRowProductFilterAtFive) {
  for (std::size_t k = 0; k <= 5; ++k) {
    const auto visited = sorted(collect(5, k));
    EXPECT_EQ(std::adjacent_find(visited.begin(), visited.end()), visited.end());
    EXPECT_EQ(visited, sorted(oracle::row_product_filter(5, k))) << "k=" << k;
  }
}

TEST(EnumerateLambda, ClosedUnderTranspose) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto visited = collect(n, k);
      const std::set<BinaryMatrix> all(visited.begin(), visited.end());
      for (const auto& m : visited) EXPECT_TRUE(all.contains(transpose(m)));
    }
  }
}

TEST(EnumerateLambdaParallel, SameMultisetAsSequential) {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 2}, {6, 3}, {4, 4}, {3, 0}}) {
    std::mutex mu;
    std::vector<BinaryMatrix> parallel;
    const Count visited = enumerate_lambda_parallel(
        n, k,
        [&](const BinaryMatrix& m) {
          std::lock_guard lock(mu);
          parallel.push_back(m);
        },
        3);
    EXPECT_EQ(visited, Count{parallel.size()});
    EXPECT_EQ(sorted(parallel), sorted(collect(n, k)));
  }
}

TEST(CountLambda, Examples) {
  EXPECT_EQ(count_lambda(3, 2), 6);
  EXPECT_EQ(count_lambda(1, 2), 0);
  EXPECT_EQ(count_lambda(5, 3), 2040);
  EXPECT_EQ(count_lambda(5, 3), count_lambda(5, 2));
  EXPECT_EQ(count_lambda(6, 3), 297200);
  EXPECT_EQ(count_lambda(1, 0), 1);
  EXPECT_EQ(count_lambda(1, 1), 1);
}

TEST(CountLambda, AgreesWithVisitorCount) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(count_lambda(n, k), enumerate_lambda(n, k, [](const BinaryMatrix&) {}));
      EXPECT_EQ(count_lambda(n, k, 4), count_lambda(n, k));
    }
  }
}

TEST(CountLambda, ComplementSymmetry) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(count_lambda(n, k), count_lambda(n, n - k));
  }
}

TEST(CountSplit, Examples) {
  EXPECT_EQ(count_split(2, 2), (SplitCount{1, 0}));
  EXPECT_EQ(count_split(3, 2), (SplitCount{4, 2}));
  EXPECT_EQ(count_split(3, 1), (SplitCount{2, 4}));
  EXPECT_EQ(count_split(3, 0), (SplitCount{0, 1}));
  EXPECT_EQ(count_split(1, 1), (SplitCount{1, 0}));
}

TEST(CountSplit, MatchesVisitedCorner) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      SplitCount expected{0, 0};
      enumerate_lambda(n, k, [&](const BinaryMatrix& m) {
        (m.at(n - 1, n - 1) ? expected.plus : expected.minus) += 1;
      });
      EXPECT_EQ(count_split(n, k), expected) << "n=" << n << " k=" << k;
      EXPECT_EQ(count_split(n, k, 2), expected);
    }
  }
}

TEST(CountSplit, CornerIdentitiesInIntegerForm) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const SplitCount s = count_split(n, k);
      EXPECT_EQ(s.plus * n, s.total() * k) << "n=" << n << " k=" << k;
      EXPECT_EQ(s.minus * k, s.plus * (n - k)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(RhoClassStats, Lambda32Example) {
  const auto stats = rho_class_stats(parse_matrix("110\n101\n011"), 2);
  EXPECT_EQ(stats.j_set, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(stats.multiplicities, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(stats.class_size, 6);
  EXPECT_EQ(stats.p_minus, 2);
  EXPECT_EQ(stats.p_plus, 4);
}

TEST(RhoClassStats, SingletonClass) {
  const auto stats = rho_class_stats(BinaryMatrix::all_ones(2), 2);
  EXPECT_EQ(stats.multiplicities, (std::vector<std::size_t>{2}));
  EXPECT_EQ(stats.class_size, 1);
  EXPECT_EQ(stats.p_minus, 0);
  EXPECT_EQ(stats.p_plus, 1);
}

TEST(RhoClassStats, IdentityK1) {
  const auto stats = rho_class_stats(BinaryMatrix::identity(3), 1);
  EXPECT_EQ(stats.multiplicities, (std::vector<std::size_t>{1}));
  EXPECT_EQ(stats.class_size, 3);
  EXPECT_EQ(stats.p_minus, 2);
  EXPECT_EQ(stats.p_plus, 1);
}

TEST(RhoClassStats, GroupsEqualColumns) {
  // Columns 1 and 2 are equal and end in 1.
  const auto stats = rho_class_stats(parse_matrix("1100\n0011\n0011\n1100"), 2);
  EXPECT_EQ(stats.multiplicities, (std::vector<std::size_t>{2}));
  EXPECT_EQ(stats.class_size, 6);  // 4!/(2! 2!)
  EXPECT_EQ(stats.p_minus, 3);     // 3!/(2! 1!)
}

TEST(RhoClassStats, Errors) {
  EXPECT_THROW(rho_class_stats(BinaryMatrix::identity(3), 2), Error);
  try {
    rho_class_stats(BinaryMatrix::identity(3), 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotLambda);
  }
  try {
    rho_class_stats(BinaryMatrix(3), 0);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidParameter);
  }
}

TEST(RhoClassGenerate, Lambda32Example) {
  const auto members = rho_class_generate(parse_matrix("110\n101\n011"), 2);
  ASSERT_EQ(members.size(), 6U);
  EXPECT_EQ(std::count_if(members.begin(), members.end(),
                          [](const BinaryMatrix& m) { return m.at(2, 2); }),
            4);
  EXPECT_EQ(rho_class_generate(BinaryMatrix::all_ones(2), 2),
            std::vector<BinaryMatrix>{BinaryMatrix::all_ones(2)});
}

TEST(RhoClassGenerate, ClassesOfLambda32CoverEverything) {
  std::set<BinaryMatrix> covered;
  const auto all = collect(3, 2);
  for (const auto& a : all) {
    if (covered.contains(a)) continue;
    for (const auto& m : rho_class_generate(a, 2)) EXPECT_TRUE(covered.insert(m).second);
  }
  EXPECT_EQ(covered, std::set<BinaryMatrix>(all.begin(), all.end()));
}

TEST(RhoClassGenerate, MatchesScanOracleAndStats) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto all = oracle::row_product_filter(n, k);
      Count plus_sum = 0;
      Count minus_sum = 0;
      std::set<BinaryMatrix> seen;
      for (const auto& a : all) {
        const auto stats = rho_class_stats(a, k);
        const auto members = rho_class_generate(a, k);
        const std::set<BinaryMatrix> unique(members.begin(), members.end());
        ASSERT_EQ(unique.size(), members.size());
        ASSERT_EQ(unique, oracle::rho_class_by_scan(a, all)) << serialize_matrix(a);
        ASSERT_EQ(Count{members.size()}, stats.class_size);
        std::size_t multiplicity_sum = 0;
        for (auto m : stats.multiplicities) multiplicity_sum += m;
        ASSERT_EQ(multiplicity_sum, k);
        ASSERT_EQ(stats.p_plus + stats.p_minus, stats.class_size);
        if (!seen.contains(a)) {
          plus_sum += stats.p_plus;
          minus_sum += stats.p_minus;
          seen.insert(unique.begin(), unique.end());
        }
      }
      EXPECT_EQ(seen.size(), all.size());
      EXPECT_EQ((SplitCount{plus_sum, minus_sum}), count_split(n, k)) << "n=" << n << " k=" << k;
    }
  }
}

// Deleting the columns ending in 1 can leave equal matrices even when the
// deleted columns differ; such a set is a union of several interleaving classes.
TEST(RhoClassGenerate, KeptColumnsAloneGiveUnionsOfClasses) {
  const BinaryMatrix a = parse_matrix("11100\n11100\n10011\n01011\n00111");
  const auto all = oracle::row_product_filter(5, 3);
  const auto coarse = oracle::rho_class_by_scan(a, all, /*same_removed=*/false);
  const auto members = rho_class_generate(a, 3);
  const std::set<BinaryMatrix> own(members.begin(), members.end());
  EXPECT_GT(coarse.size(), own.size());
  for (const auto& b : coarse) {
    const auto other = rho_class_generate(b, 3);
    const std::set<BinaryMatrix> cls(other.begin(), other.end());
    for (const auto& m : cls) EXPECT_TRUE(coarse.contains(m));
    const bool disjoint = std::none_of(cls.begin(), cls.end(),
                                       [&](const BinaryMatrix& m) { return own.contains(m); });
    EXPECT_TRUE(cls == own || disjoint);
  }
}

}  // namespace
}  // namespace lambdakit
