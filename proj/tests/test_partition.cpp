#include "partlim/partition.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace {

using partlim::Rational;

TEST(Partition, EnumeratesInLexDecreasingOrder) {
  const auto parts = partlim::partitions_with_max_part(6, 3);
  // Partitions of 6 with largest part exactly 3.
  const std::vector<std::vector<int>> expected = {
      {3, 3}, {3, 2, 1}, {3, 1, 1, 1}};
  ASSERT_EQ(parts.size(), expected.size());
  for (std::size_t i = 0; i < parts.size(); ++i) EXPECT_EQ(parts[i].parts, expected[i]);
}

TEST(Partition, CountsMatchClassicalPartitionNumbers) {
  // Summing over all largest parts recovers p(n); p(1..10) below.
  const std::vector<int> p = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) {
    std::size_t total = 0;
    for (int k = 1; k <= n; ++k) total += partlim::partitions_with_max_part(n, k).size();
    EXPECT_EQ(total, static_cast<std::size_t>(p[static_cast<std::size_t>(n - 1)])) << "n=" << n;
  }
}

TEST(Partition, EveryEmittedPartitionIsValid) {
  for (int n : {5, 9, 14}) {
    for (int k = 1; k <= n; ++k) {
      partlim::enumerate_partitions(n, k, [&](const std::vector<int>& parts) {
        ASSERT_FALSE(parts.empty());
        EXPECT_EQ(parts.front(), k);
        EXPECT_TRUE(std::is_sorted(parts.rbegin(), parts.rend()));
        int sum = 0;
        for (int part : parts) {
          EXPECT_GE(part, 1);
          sum += part;
        }
        EXPECT_EQ(sum, n);
      });
    }
  }
}

TEST(Partition, NoDuplicates) {
  std::set<std::vector<int>> seen;
  std::size_t count = 0;
  for (int k = 1; k <= 12; ++k) {
    partlim::enumerate_partitions(12, k, [&](const std::vector<int>& parts) {
      seen.insert(parts);
      ++count;
    });
  }
  EXPECT_EQ(seen.size(), count);
  EXPECT_EQ(count, 77u);  // p(12)
}

TEST(Partition, WeightIsProductOfParts) {
  partlim::Partition p{{4, 2, 2, 1}};
  EXPECT_EQ(p.weight(), 16u);
  EXPECT_EQ(p.sum(), 9);
}

TEST(BruteForce, HandComputedSmallCases) {
  // n = 4, k = 2: partitions 2+2 (weight 4) and 2+1+1 (weight 2).
  EXPECT_EQ(partlim::brute_force_b(4, 2), Rational(3, 4));
  // n = 3: 3 (w 3); 2+1 (w 2); 1+1+1 (w 1) -> total 1/3 + 1/2 + 1 = 11/6.
  EXPECT_EQ(partlim::brute_force_b_total(3), Rational(11, 6));
  EXPECT_EQ(partlim::brute_force_b_total(4), Rational(7, 3));
  // Largest part n: single partition of weight n.
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(partlim::brute_force_b(n, n), Rational(1, n));
  // Largest part 1: all-ones partition, weight 1.
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(partlim::brute_force_b(n, 1), Rational(1));
}

TEST(BruteForce, ZeroAboveDiagonal) {
  EXPECT_EQ(partlim::brute_force_b(5, 6), Rational(0));
  EXPECT_EQ(partlim::brute_force_b(1, 7), Rational(0));
}

TEST(BruteForce, RefusalsAndValidation) {
  EXPECT_THROW(partlim::brute_force_b(0, 1), std::invalid_argument);
  EXPECT_THROW(partlim::brute_force_b(5, 0), std::invalid_argument);
  EXPECT_THROW(partlim::brute_force_b(partlim::kOracleCap + 1, 1), partlim::computation_error);
  EXPECT_THROW(partlim::enumerate_partitions(0, 0, [](const std::vector<int>&) {}),
               std::invalid_argument);
  EXPECT_THROW(partlim::enumerate_partitions(5, 6, [](const std::vector<int>&) {}),
               std::invalid_argument);
}

TEST(BruteForce, OracleSatisfiesTheRecurrence) {
  // Stripping the forced largest part k from each partition leaves an
  // arbitrary partition of n - k with parts <= k, so the enumeration
  // totals must satisfy b(n, k) = (1/k) sum_{i <= min(k, n-k)} b(n-k, i)
  // without any reference to the table code.  Random (n, k) pairs.
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> pick_n(2, 22);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_k(1, n - 1);
    const int k = pick_k(rng);
    Rational rhs(0);
    for (int i = 1; i <= std::min(k, n - k); ++i) rhs += partlim::brute_force_b(n - k, i);
    rhs /= k;
    EXPECT_EQ(partlim::brute_force_b(n, k), rhs) << "n=" << n << " k=" << k;
  }
}

}  // namespace
