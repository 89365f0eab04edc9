#include <doctest.h>

#include "hyperoct/series.hpp"

using namespace hyperoct;

TEST_CASE("power sums expand into monomials") {
  SymSeries s(2, Basis::power);
  s.add({1, 1}, {2}, 1);
  auto m = convertPPtoMM(s);
  CHECK(m.coefficient({2}, {2}) == 1);
  CHECK(m.coefficient({1, 1}, {2}) == 2);
  CHECK(m.coefficients().size() == 2);

  SymSeries single(4, Basis::power);
  single.add({4}, {4}, 1);
  auto pn = convertPPtoMM(single);
  CHECK(pn.coefficients().size() == 1);
  CHECK(pn.coefficient({4}, {4}) == 1);
}

TEST_CASE("converted pairing series at n = 2") {
  auto m = convertPPtoMM(lhsSeriesFromL(2));
  CHECK(m.coefficient({2}, {2}) == 3);
  CHECK(m.coefficient({2}, {1, 1}) == 2);
  CHECK(m.coefficient({1, 1}, {2}) == 2);
  CHECK(m.coefficient({1, 1}, {1, 1}) == 0);
}

TEST_CASE("monomial conversion inverts the power conversion") {
  for (int n = 1; n <= 6; ++n) {
    auto p = lhsSeriesFromL(n);
    CHECK(compareSeries(convertMMtoPP(convertPPtoMM(p)), p).equal);
  }
}

TEST_CASE("converted series is Aut-weighted LP") {
  for (int n = 1; n <= 5; ++n) {
    auto m = convertPPtoMM(lhsSeriesFromL(n));
    SymSeries weighted(n, Basis::monomial);
    for (const auto& [key, count] : lpFromL(n)) {
      weighted.add(key.first, key.second,
                   Rational(automorphismFactor(key.first) *
                            automorphismFactor(key.second) * count));
    }
    CHECK(compareSeries(m, weighted).equal);
  }
}

TEST_CASE("compareSeries reports the first difference") {
  auto a = lhsSeriesFromL(3);
  CHECK(compareSeries(a, a).equal);
  auto b = a;
  b.add({2, 1}, {3}, Rational(1, 2));
  auto c = compareSeries(a, b);
  CHECK_FALSE(c.equal);
  REQUIRE(c.firstDifference.has_value());
  CHECK(c.firstDifference->first == Partition{2, 1});
  CHECK(c.firstDifference->second == Partition{3});
  CHECK(c.right - c.left == Rational(1, 2));
  CHECK_THROWS_AS(compareSeries(a, convertPPtoMM(a)), BasisMismatch);
  CHECK_THROWS_AS(compareSeries(a, lhsSeriesFromL(2)), BasisMismatch);
  CHECK_THROWS(a.add({2}, {3}, 1));
}
