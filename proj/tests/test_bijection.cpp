#include <doctest.h>

#include <set>

#include "hyperoct/bijection.hpp"
#include "hyperoct/serialize.hpp"

using namespace hyperoct;

namespace {

Json load(const std::string& name) {
  const std::string path = std::string(HYPEROCT_TEST_DATA) + "/" + name;
  return parseJson(readFile(path), path);
}

}  // namespace

TEST_CASE("the n = 1 triple") {
  PartitionedHypermap map{canonicalFStar(1),
                          SetPartition(1, {{Point(1), Point(-1)}}),
                          SetPartition(1, {{Point(1), Point(-1)}})};
  auto forest = thetaForward(map);
  REQUIRE(forest.vertices.size() == 2);
  CHECK((forest.vertices[0].kind == VertexKind::seedRoot));
  CHECK(forest.vertices[0].descendants == std::vector<Slot>{EdgeSlot{1}});
  CHECK(thetaInverse(forest) == map);
}

TEST_CASE("forward image of the n = 12 example") {
  auto forest = thetaForward(hypermapFromJson(load("triple_n12.json")));
  CHECK(validateForest(forest).empty());
  CHECK(forestDegree(forest).toString() ==
        "P=E_{2,0,0}+E_{3,0,1}+E_{4,1,0};P'=E_{3,0,1};"
        "Q=E_{4,1,0}+E_{5,0,1};Q'=E_{3,0,1}");
}

TEST_CASE("the n = 11 example forest recovers its triple") {
  auto forest = forestFromJson(load("forest_n11.json"));
  CHECK(validateForest(forest).empty());
  CHECK(forestDegree(forest).toString() ==
        "P=E_{4,1,0}+E_{7,0,3};P'=0;Q=E_{7,0,2};Q'=E_{4,0,2}");
  auto expected = hypermapFromJson(load("triple_n11.json"));
  auto recovered = thetaInverse(forest);
  CHECK(recovered == expected);
  CHECK(recovered.edges.partner(Point(3)) == Point(-11));
  CHECK(recovered.edges.partner(Point(-5)) == Point(6));
}

TEST_CASE("round trip and degree preservation for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    std::set<PermutedForest> seen;
    forEachPartitionedHypermap(n, [&](const PartitionedHypermap& map) {
      auto forest = thetaForward(map);
      CHECK(validateForest(forest).empty());
      CHECK(forestDegree(forest) == degreeStatistics(map));
      CHECK(thetaInverse(forest) == map);
      CHECK(thetaForward(thetaInverse(forest)) == forest);
      CHECK(seen.insert(forest).second);
    });
  }
}

TEST_CASE("invalid forests are rejected before recovery") {
  PermutedForest f;
  f.n = 1;
  f.vertices.push_back({0, Color::white, VertexKind::seedRoot, {ThornSlot{0}}, {}});
  f.vertices.push_back({1, Color::black, VertexKind::internal, {}, {}});
  try {
    thetaInverse(f);
    FAIL("expected InvalidForest");
  } catch (const InvalidForest& e) {
    CHECK_FALSE(e.violations().empty());
  }
}
