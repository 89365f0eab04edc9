#include <doctest.h>

#include <map>

#include "hyperoct/permutation.hpp"

using namespace hyperoct;

TEST_CASE("point encoding orders 1 < 1^ < 2 < 2^") {
  CHECK(Point::plain(1).index() == 0);
  CHECK(Point::hat(1).index() == 1);
  CHECK(Point::plain(2).index() == 2);
  CHECK(Point::fromIndex(3) == Point::hat(2));
  CHECK(Point::hat(1) < Point::plain(2));
}

TEST_CASE("composition applies the right factor first") {
  auto a = Permutation::fromCycles(2, {{1, 2}});
  auto b = Permutation::fromCycles(2, {{2, -1}});
  auto ab = compose(a, b);
  CHECK(ab(Point(2)) == Point(-1));
  CHECK(ab(Point(-1)) == Point(1));
  CHECK(ab(Point(1)) == Point(2));
  CHECK(compose(ab, ab.inverse()) == Permutation::identity(2));
}

TEST_CASE("canonical pairings") {
  auto f1 = canonicalF1(3);
  CHECK(f1.partner(Point(1)) == Point(-3));
  CHECK(f1.partner(Point(2)) == Point(-1));
  CHECK(f1.partner(Point(3)) == Point(-2));
  auto fs = canonicalFStar(2);
  CHECK(fs.partner(Point(2)) == Point(-2));
  auto w = longTarget(3);
  CHECK(w(Point(1)) == Point(2));
  CHECK(w(Point(3)) == Point(1));
  CHECK(w(Point(-3)) == Point(-2));
  CHECK(cycleType(longTarget(1)) == Partition{1, 1});
  CHECK(halvedCycleType(compose(canonicalF1(4), canonicalFStar(4))) ==
        Partition{4});
  CHECK_THROWS_AS(halvedCycleType(Permutation::fromCycles(2, {{1, 2}})),
                  NotDoubled);
}

TEST_CASE("pairing validation") {
  CHECK_THROWS(Pairing(Permutation::identity(2)));
  CHECK_THROWS(Pairing(Permutation::fromCycles(2, {{1, 2, -1}})));
  CHECK_THROWS(Permutation(std::vector<int>{0, 0}));
}

TEST_CASE("pairings are enumerated once each") {
  long expected = 1;
  for (int n = 1; n <= 6; ++n) {
    expected *= 2 * n - 1;
    auto all = enumeratePairings(n);
    CHECK(long(all.size()) == expected);
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    long sliced = 0;
    for (int partner = 1; partner < 2 * n; ++partner) {
      forEachPairingWithFirstPartner(n, partner, [&](const Pairing& f) {
        CHECK(f.partnerIndex(0) == partner);
        ++sliced;
      });
    }
    CHECK(sliced == expected);
  }
  auto two = enumeratePairings(2);
  CHECK(two[0] == Pairing::fromPairs(2, {{1, -1}, {2, -2}}));
}

TEST_CASE("double cosets") {
  CHECK(pairingOf(Permutation::identity(3)) == canonicalFStar(3));
  CHECK(doubleCosetOf(Permutation::identity(3)) == Partition{1, 1, 1});
  // f_⋆∘f_w = w² for w = w_(n): the printed w_(n) is in K_(n) for odd n only.
  CHECK(doubleCosetOf(longTarget(3)) == Partition{3});
  CHECK(doubleCosetOf(longTarget(5)) == Partition{5});
  CHECK(doubleCosetOf(longTarget(2)) == Partition{1, 1});
  CHECK(doubleCosetOf(longTarget(4)) == Partition{2, 2});
  for (int n = 1; n <= 4; ++n) {
    std::map<Partition, BigInt> sizes;
    long members = 0;
    forEachPermutation(n, [&](const Permutation& w) {
      ++sizes[doubleCosetOf(w)];
      if (pairingOf(w) == canonicalFStar(n)) ++members;
    });
    for (const auto& nu : enumeratePartitions(n)) {
      CHECK(sizes[nu] == doubleCosetSize(nu));
    }
    CHECK(members == hyperoctahedralOrder(n));
  }
}
