#include <doctest.h>

#include <functional>

#include "hyperoct/partition.hpp"

using namespace hyperoct;

namespace {

// p(n) by Euler's pentagonal recurrence.
long partitionNumber(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long sign = k % 2 == 1 ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  return p[n];
}

// Unordered set partitions of the part indices with sorted block sums = mu.
long refinementsByBruteForce(const Partition& lambda, const Partition& mu) {
  const int l = lambda.length();
  std::vector<int> block(l, 0);
  long count = 0;
  std::function<void(int, int)> grow = [&](int i, int blocks) {
    if (i == l) {
      std::vector<int> sums(blocks, 0);
      for (int t = 0; t < l; ++t) sums[block[t]] += lambda[t];
      if (Partition::fromUnsorted(sums) == mu) ++count;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[i] = b;
      grow(i + 1, std::max(blocks, b + 1));
    }
  };
  grow(0, 0);
  return count;
}

}  // namespace

TEST_CASE("partitions are enumerated in reverse lexicographic order") {
  auto three = enumeratePartitions(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Partition{3});
  CHECK(three[1] == Partition{2, 1});
  CHECK(three[2] == Partition{1, 1, 1});
  CHECK(Partition{3} < Partition{2, 1});
  for (int n = 1; n <= 15; ++n) {
    CHECK(long(enumeratePartitions(n).size()) == partitionNumber(n));
  }
}

TEST_CASE("partition parsing and validation") {
  CHECK(Partition::parse("4,3,2,2,1") == Partition{4, 3, 2, 2, 1});
  CHECK(Partition::parse("5").size() == 5);
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::fromUnsorted({1, 3, 0, 2}) == Partition{3, 2, 1});
}

TEST_CASE("automorphism and z factors") {
  CHECK(automorphismFactor(Partition{2, 2, 1}) == 2);
  CHECK(automorphismFactor(Partition{1, 1, 1}) == 6);
  CHECK(zFactor(Partition{2, 2, 1}) == 8);
  // Σ n!/z_λ = n!
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& p : enumeratePartitions(n)) total += factorial(n) / zFactor(p);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("doubling and halving") {
  CHECK(doubled(Partition{3, 1}) == Partition{3, 3, 1, 1});
  CHECK(scaled2(Partition{3, 1}) == Partition{6, 2});
  CHECK(halveDoubled(Partition{3, 3, 1, 1}) == Partition{3, 1});
  CHECK_FALSE(halveDoubled(Partition{3, 1, 1}).has_value());
}

TEST_CASE("refinement counts agree with set-partition enumeration") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : enumeratePartitions(n)) {
      for (const auto& mu : enumeratePartitions(n)) {
        CHECK(refinementCount(lambda, mu) == refinementsByBruteForce(lambda, mu));
      }
    }
  }
  CHECK(refinementCount(Partition{1, 1}, Partition{2}) == 1);
  CHECK(refinementCount(Partition{2}, Partition{1, 1}) == 0);
}

TEST_CASE("hook products") {
  CHECK(hookProduct(Partition{3, 2, 1}) == 45);
  CHECK(hookProduct(Partition{4}) == 24);
  // Σ (n!/H_λ)² = n!
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& p : enumeratePartitions(n)) {
      BigInt dim = factorial(n) / hookProduct(p);
      total += dim * dim;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("double coset sizes partition S_2n") {
  for (int n = 1; n <= 7; ++n) {
    BigInt total = 0;
    for (const auto& nu : enumeratePartitions(n)) total += doubleCosetSize(nu);
    CHECK(total == factorial(2 * n));
  }
  CHECK(doubleCosetSize(Partition{2}) == 16);
  CHECK(hyperoctahedralOrder(3) == 48);
}
