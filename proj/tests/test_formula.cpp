#include <doctest.h>

#include "hyperoct/formula.hpp"
#include "hyperoct/series.hpp"

using namespace hyperoct;

namespace {

DegreeArray array(std::initializer_list<DegreeKey> white,
                  std::initializer_list<DegreeKey> whiteRoots,
                  std::initializer_list<DegreeKey> black,
                  std::initializer_list<DegreeKey> blackRoots) {
  DegreeArray a;
  for (auto k : white) DegreeArray::add(a.white, k);
  for (auto k : whiteRoots) DegreeArray::add(a.whiteRoots, k);
  for (auto k : black) DegreeArray::add(a.black, k);
  for (auto k : blackRoots) DegreeArray::add(a.blackRoots, k);
  return a;
}

}  // namespace

TEST_CASE("bounded multinomial") {
  CHECK(boundedMultinomial(4, 1, 1, 1) == 24);
  CHECK(boundedMultinomial(4, 2, 0, 2) == 6);
  CHECK(boundedMultinomial(2, 1, 1, 1) == 0);
  CHECK(boundedMultinomial(-1, 0, 0, 0) == 0);
  CHECK(boundedMultinomial(3, 0, 0, -1) == 0);
}

TEST_CASE("size of M summed over all (lambda, mu)") {
  const std::size_t expected[] = {1, 4, 13, 53};
  for (int n = 1; n <= 4; ++n) {
    std::size_t total = 0;
    for (const auto& lambda : enumeratePartitions(n)) {
      for (const auto& mu : enumeratePartitions(n)) {
        for (const auto& a : enumerateM(lambda, mu)) {
          CHECK(a.halfSize() == n);
          CHECK(a.loopPairs() == a.loopPairsBlack());
          ++total;
        }
      }
    }
    CHECK(total == expected[n - 1]);
  }
  CHECK_THROWS(enumerateM(Partition{2}, Partition{1}));
}

TEST_CASE("closed form equals the partitioned hypermap count per degree array") {
  for (int n = 1; n <= 4; ++n) {
    auto census = partitionedHypermapCensus(n);
    std::map<DegreeArray, Rational> fromM;
    for (const auto& lambda : enumeratePartitions(n)) {
      for (const auto& mu : enumeratePartitions(n)) {
        for (const auto& a : enumerateM(lambda, mu)) {
          fromM[a] = closedFormSummand(a, n).value;
        }
      }
    }
    for (const auto& [a, count] : census.byDegree) {
      REQUIRE(fromM.count(a));
      CHECK(fromM[a] == Rational(count));
    }
    for (const auto& [a, value] : fromM) {
      if (!census.byDegree.count(a)) CHECK(value == 0);
    }
  }
}

TEST_CASE("trivial and orientable summands") {
  auto one = array({{1, 0, 0}}, {}, {{1, 0, 0}}, {});
  CHECK(closedFormSummand(one, 1).value == 1);
  CHECK(nFactor(one, 1) == 1);
  auto two = array({{2, 0, 0}}, {}, {{2, 0, 0}}, {});
  CHECK(closedFormSummand(two, 2).value == 2);
}

TEST_CASE("pole-cancelled regime") {
  // q = 0 and n - p - 2r = -1; the printed expression has (-1)!.
  auto a = array({{1, 0, 0}, {2, 1, 0}}, {}, {}, {{3, 0, 1}});
  auto s = closedFormSummand(a, 3);
  CHECK((s.regime == SummandRegime::poleCancelled));
  CHECK(s.value == 2);
  CHECK(toString(s.regime) == "pole-cancelled");
}

TEST_CASE("nFactor rejects the special configurations") {
  // q' ≠ 0 with a white entry i = 2(j+k)
  auto a = array({{1, 0, 0}, {2, 1, 0}}, {}, {}, {{3, 0, 1}});
  CHECK_THROWS_AS(nFactor(a, 3), std::domain_error);
}

TEST_CASE("sum over M((n),(n)) is (2n-1)!!") {
  BigInt expected = 1;
  for (int n = 1; n <= 8; ++n) {
    expected *= 2 * n - 1;
    Rational total = 0;
    for (const auto& a : enumerateM(Partition{n}, Partition{n})) {
      total += closedFormSummand(a, n).value;
    }
    CHECK(total == Rational(expected));
  }
}

TEST_CASE("rhs series is integral and matches the pairing side") {
  for (int n = 1; n <= 5; ++n) {
    auto c = compareSeries(convertPPtoMM(lhsSeriesFromL(n)), rhsSeries(n));
    CHECK(c.equal);
  }
}

TEST_CASE("orientable closed form") {
  auto s = orientableSeries(3);
  // n (n-1)! (n-1)! / (n-1)! for λ = μ = (n)
  CHECK(s.coefficient({3}, {3}) == 6);
  CHECK(s.coefficient({1, 1, 1}, {1, 1, 1}) == 0);
  CHECK(bruteForceC(3).coefficient({2, 1}, {2, 1}) == 3);
  for (int n = 1; n <= 6; ++n) {
    CHECK(compareSeries(convertPPtoMM(bruteForceC(n)), orientableSeries(n)).equal);
    BigInt total = 0;
    const auto c = bruteForceC(n);
    for (const auto& [key, value] : c.coefficients()) {
      total += value.get_num();
    }
    CHECK(total == factorial(n));
  }
}
