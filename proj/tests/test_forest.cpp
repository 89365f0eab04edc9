#include <doctest.h>

#include "hyperoct/forest.hpp"
#include "hyperoct/formula.hpp"
#include "hyperoct/serialize.hpp"

using namespace hyperoct;

namespace {

PermutedForest singleEdge() {
  PermutedForest f;
  f.n = 1;
  f.vertices.push_back({0, Color::white, VertexKind::seedRoot, {EdgeSlot{1}}, {}});
  f.vertices.push_back({1, Color::black, VertexKind::internal, {}, {}});
  return f;
}

// n = 2: black root with a loop, arrow to the white seed root carrying j = 1.
PermutedForest withArrow() {
  PermutedForest f;
  f.n = 2;
  f.vertices.push_back({7, Color::white, VertexKind::seedRoot,
                        {LoopSlot{4, LoopEnd::open}, LoopSlot{4, LoopEnd::close}},
                        {}});
  f.vertices.push_back({3, Color::black, VertexKind::nonSeedRoot,
                        {LoopSlot{9, LoopEnd::open}, LoopSlot{9, LoopEnd::close}},
                        7});
  f.loopAssignments[4] = 3;
  return f;
}

DegreeArray array(std::initializer_list<DegreeKey> white,
                  std::initializer_list<DegreeKey> black) {
  DegreeArray a;
  for (auto k : white) DegreeArray::add(a.white, k);
  for (auto k : black) DegreeArray::add(a.black, k);
  return a;
}

}  // namespace

TEST_CASE("the n = 1 forest") {
  auto f = singleEdge();
  CHECK(validateForest(f).empty());
  CHECK(forestDegree(f) == array({{1, 0, 0}}, {{1, 0, 0}}));
  auto all = enumerateForests(array({{1, 0, 0}}, {{1, 0, 0}}));
  REQUIRE(all.size() == 1);
  CHECK(all[0] == canonicalForm(f));
}

TEST_CASE("a forest with an arrow") {
  auto f = withArrow();
  CHECK(validateForest(f).empty());
  auto a = forestDegree(f);
  CHECK(a.white == DegreeCounts{{{2, 1, 0}, 1}});
  CHECK(a.blackRoots == DegreeCounts{{{2, 0, 1}, 1}});
  auto c = canonicalForm(f);
  CHECK(c.vertices[0].id == 0);
  CHECK(c.vertices[1].arrowTo == 0);
  CHECK(c.loopAssignments == std::map<int, int>{{0, 1}});
}

TEST_CASE("violations are reported") {
  auto f = withArrow();
  f.vertices[1].descendants = {LoopSlot{9, LoopEnd::open},
                               LoopSlot{9, LoopEnd::close}, ThornSlot{0}};
  f.vertices[0].descendants.push_back(ThornSlot{0});
  auto v = validateForest(f);
  REQUIRE_FALSE(v.empty());
  bool rightmost = false;
  for (const auto& line : v) {
    rightmost = rightmost || line.find("rightmost") != std::string::npos;
  }
  CHECK(rightmost);

  auto g = singleEdge();
  g.vertices[1].color = Color::white;
  CHECK_FALSE(validateForest(g).empty());

  auto h = withArrow();
  h.loopAssignments.clear();
  CHECK_FALSE(validateForest(h).empty());

  auto cyclic = withArrow();
  cyclic.vertices[0].kind = VertexKind::nonSeedRoot;
  cyclic.vertices[0].arrowTo = 3;
  CHECK_FALSE(validateForest(cyclic).empty());
}

TEST_CASE("canonical form ignores symbolic labels") {
  auto a = withArrow();
  auto b = withArrow();
  b.vertices[0].id = 100;
  b.vertices[1].arrowTo = 100;
  b.vertices[0].descendants = {LoopSlot{50, LoopEnd::open},
                               LoopSlot{50, LoopEnd::close}};
  b.loopAssignments = {{50, 3}};
  std::swap(b.vertices[0], b.vertices[1]);
  CHECK(canonicalForm(a) == canonicalForm(b));
  CHECK(canonicalForm(canonicalForm(a)) == canonicalForm(a));
}

TEST_CASE("enumerated forests are sound and counted by the closed form") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : enumeratePartitions(n)) {
      for (const auto& mu : enumeratePartitions(n)) {
        for (const auto& a : enumerateM(lambda, mu)) {
          auto forests = enumerateForests(a);
          for (const auto& f : forests) {
            CHECK(validateForest(f).empty());
            CHECK(forestDegree(f) == a);
            // thorns and loops balance between the colours
            int thorns[2] = {0, 0};
            for (const auto& v : f.vertices) {
              for (const auto& s : v.descendants) {
                if (std::holds_alternative<ThornSlot>(s)) ++thorns[int(v.color)];
              }
            }
            CHECK(thorns[0] == thorns[1]);
          }
          CHECK(Rational(long(forests.size())) == closedFormSummand(a, n).value);
        }
      }
    }
  }
}

TEST_CASE("forest JSON round trip") {
  auto f = canonicalForm(withArrow());
  auto json = toJson(f);
  CHECK(json["vertices"][1]["arrowTo"] == 0);
  CHECK_FALSE(json["vertices"][0].contains("arrowTo"));
  CHECK(json["loopAssignments"]["0"] == 1);
  CHECK(forestFromJson(parseJson(json.dump(), "inline")) == f);
  CHECK_THROWS_AS(forestFromJson(parseJson(R"({"n":1})", "inline")), ParseError);
  CHECK_THROWS_AS(parseJson("{\n  \"n\": ,\n}", "bad.json"), ParseError);
  try {
    parseJson("{\n  \"n\": ,\n}", "bad.json");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("bad.json:2:", 0) == 0);
  }
}
