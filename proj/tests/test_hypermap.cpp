#include <doctest.h>

#include "hyperoct/hypermap.hpp"
#include "hyperoct/serialize.hpp"
#include "hyperoct/series.hpp"

using namespace hyperoct;

namespace {

BigInt entry(const CountTable& table, const Partition& a, const Partition& b) {
  auto it = table.find({a, b});
  return it == table.end() ? BigInt(0) : it->second;
}

PartitionedHypermap loadTriple(const std::string& name) {
  const std::string path = std::string(HYPEROCT_TEST_DATA) + "/" + name;
  return hypermapFromJson(parseJson(readFile(path), path));
}

}  // namespace

TEST_CASE("countL at n = 2") {
  auto l = countL(2);
  CHECK(entry(l, {2}, {2}) == 1);
  CHECK(entry(l, {2}, {1, 1}) == 1);
  CHECK(entry(l, {1, 1}, {2}) == 1);
  CHECK(entry(l, {1, 1}, {1, 1}) == 0);
}

TEST_CASE("countL sums to (2n-1)!! and is symmetric") {
  BigInt expected = 1;
  for (int n = 1; n <= 6; ++n) {
    expected *= 2 * n - 1;
    auto l = countL(n);
    BigInt total = 0;
    for (const auto& [key, count] : l) {
      total += count;
      CHECK(entry(l, key.second, key.first) == count);
    }
    CHECK(total == expected);
  }
}

TEST_CASE("vertex distributions of the canonical pairings") {
  // f_3 = f_⋆ gives f_3∘f_2 = id: every black vertex has degree one.
  auto [white, black] = vertexDistributions(canonicalFStar(3));
  CHECK(black == Partition{1, 1, 1});
  CHECK(white == Partition{3});
  CHECK(isOrientable(canonicalFStar(3)));
  CHECK_FALSE(isOrientable(Pairing::fromPairs(2, {{1, 2}, {-1, -2}})));
}

TEST_CASE("partitioned hypermap totals") {
  const long totals[] = {1, 5, 38, 382};
  for (int n = 1; n <= 4; ++n) {
    long count = 0;
    forEachPartitionedHypermap(n, [&](const PartitionedHypermap& map) {
      ++count;
      CHECK(isStable(map.whiteBlocks, map.edges, Side::white));
      CHECK(isStable(map.blackBlocks, map.edges, Side::black));
    });
    CHECK(count == totals[n - 1]);
    CHECK(partitionedHypermapCensus(n).total == totals[n - 1]);
  }
}

TEST_CASE("LP from L matches enumerated partitioned hypermaps") {
  for (int n = 1; n <= 4; ++n) {
    auto census = partitionedHypermapCensus(n);
    auto fromL = lpFromL(n);
    for (const auto& nu : enumeratePartitions(n)) {
      for (const auto& rho : enumeratePartitions(n)) {
        CHECK(entry(fromL, nu, rho) == entry(census.byType, nu, rho));
      }
    }
  }
  auto lp2 = lpFromL(2);
  CHECK(entry(lp2, {2}, {2}) == 3);
  CHECK(entry(lp2, {2}, {1, 1}) == 1);
}

TEST_CASE("number of degree arrays with LP(A) > 0") {
  const std::size_t expected[] = {1, 4, 11, 39};
  for (int n = 1; n <= 4; ++n) {
    CHECK(partitionedHypermapCensus(n).byDegree.size() == expected[n - 1]);
  }
}

TEST_CASE("set partition validation") {
  CHECK_THROWS(SetPartition(1, {{Point(1)}}));
  CHECK_THROWS(SetPartition(1, {{Point(1), Point(-1)}, {Point(1)}}));
  CHECK_NOTHROW(SetPartition(1, {{Point(1), Point(-1)}}));
}

TEST_CASE("degree statistics of the n = 12 example triple") {
  auto map = loadTriple("triple_n12.json");
  CHECK(map.whiteBlocks.halfType() == Partition{4, 3, 3, 2});
  CHECK(map.blackBlocks.halfType() == Partition{5, 4, 3});
  DegreeArray a = degreeStatistics(map);
  CHECK(a.toString() ==
        "P=E_{2,0,0}+E_{3,0,1}+E_{4,1,0};P'=E_{3,0,1};"
        "Q=E_{4,1,0}+E_{5,0,1};Q'=E_{3,0,1}");
}

TEST_CASE("coset oracle") {
  // b^{(n)} = 2^n n! L^n
  for (int n = 1; n <= 3; ++n) {
    auto l = countL(n);
    auto b = bruteForceBTable(Partition{n});
    for (const auto& [key, count] : b) {
      CHECK(count == hyperoctahedralOrder(n) * entry(l, key.first, key.second));
    }
    CHECK(doubleCosetOf(cosetRepresentative(Partition{n})) == Partition{n});
  }
  CHECK(bruteForceB({2}, {2}, {2}) == 8);
  CHECK(bruteForceB({1, 1}, {2}, {2}) == 16);
  CHECK(bruteForceB({1}, {1}, {1}) == 2);
  CHECK_THROWS_AS(bruteForceB({2}, {1}, {1}), SizeMismatch);
}
