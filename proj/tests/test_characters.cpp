#include <doctest.h>

#include "hyperoct/characters.hpp"

using namespace hyperoct;

TEST_CASE("Murnaghan-Nakayama examples") {
  CHECK(mnCharacter({1, 1}, {2}) == -1);
  CHECK(mnCharacter({2, 1}, {1, 1, 1}) == 2);
  CHECK(mnCharacter({2, 1}, {3}) == -1);
  CHECK(mnCharacter({2, 2}, {2, 2}) == 2);
  for (const auto& mu : enumeratePartitions(5)) {
    CHECK(mnCharacter({5}, mu) == 1);
  }
  CHECK_THROWS_AS(mnCharacter({2}, {1}), SizeMismatch);
}

TEST_CASE("character dimensions follow the hook length formula") {
  for (int m = 1; m <= 7; ++m) {
    std::vector<int> ones(m, 1);
    const Partition identityType(ones);
    for (const auto& shape : enumeratePartitions(m)) {
      CHECK(mnCharacter(shape, identityType) == factorial(m) / hookProduct(shape));
    }
  }
}

TEST_CASE("column orthogonality") {
  for (int m = 1; m <= 6; ++m) {
    const auto partitions = enumeratePartitions(m);
    for (const auto& mu : partitions) {
      for (const auto& rho : partitions) {
        BigInt sum = 0;
        for (const auto& shape : partitions) {
          sum += mnCharacter(shape, mu) * mnCharacter(shape, rho);
        }
        CHECK(sum == (mu == rho ? zFactor(mu) : BigInt(0)));
      }
    }
  }
}

TEST_CASE("zonal character sums") {
  CHECK(zonalCharacter({1}, {1}) == 2);
  CHECK(zonalCharacter({2}, {2}) == 16);
  CHECK(zonalCharacter({2}, {1, 1}) == 8);
  CHECK(zonalCharacter({1, 1}, {2}) == -8);
  CHECK(zonalCharacter({1, 1}, {1, 1}) == 8);
  CHECK(zonalCharacter({3}, {3}) == 384);
  // χ^{(2n)} is trivial: the sum over μ is (2n)!
  for (int n = 1; n <= 4; ++n) {
    BigInt total = 0;
    for (const auto& mu : enumeratePartitions(n)) total += zonalCharacter({n}, mu);
    CHECK(total == factorial(2 * n));
  }
}

TEST_CASE("Hecke expansion of b") {
  CHECK(heckeB({1}, {1}, {1}) == 2);
  CHECK(heckeB({2}, {2}, {2}) == 8);
  CHECK(heckeB({1, 1}, {2}, {2}) == 16);
  // The H_{2ν} reading already fails at n = 2.
  CHECK(heckeB({2}, {2}, {2}, HookReading::perNu) != 8);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& nu : enumeratePartitions(n)) {
      for (const auto& [key, count] : bruteForceBTable(nu)) {
        CHECK(heckeB(nu, key.first, key.second) == Rational(count));
      }
    }
  }
  CHECK(toString(HookReading::perBeta) == "H_{2beta}");
}
