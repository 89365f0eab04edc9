#include "hyperoct/bijection.hpp"

#include <algorithm>

namespace hyperoct {

PermutedForest thetaForward(const PartitionedHypermap& map) {
  map.validate();
  const int n = map.n();
  const auto& white = map.whiteBlocks.blocks();
  const auto& black = map.blackBlocks.blocks();
  const int whiteCount = int(white.size());
  const int count = whiteCount + int(black.size());
  auto colorOf = [&](int v) { return v < whiteCount ? Color::white : Color::black; };
  // A white vertex owns the non-hat points of its block, a black one the hats.
  std::vector<std::vector<Point>> labels(count);
  std::vector<int> owner(2 * n, -1);
  for (int v = 0; v < count; ++v) {
    const auto& block = v < whiteCount ? white[v] : black[v - whiteCount];
    for (Point x : block) {
      if (x.isHat() == (colorOf(v) == Color::black)) {
        labels[v].push_back(x);
        owner[x.index()] = v;
      }
    }
    std::sort(labels[v].begin(), labels[v].end());
  }
  // Vertex of colour opposite to `color` whose block contains x.
  auto oppositeBlock = [&](Color color, Point x) {
    return color == Color::white ? whiteCount + map.blackBlocks.blockOf(x)
                                 : map.whiteBlocks.blockOf(x);
  };
  const Pairing& f3 = map.edges;
  const int seed = owner[Point::plain(1).index()];

  std::vector<VertexKind> kind(count, VertexKind::seedRoot);
  std::vector<int> parent(count, -1);
  for (int v = 0; v < count; ++v) {
    if (v == seed) continue;
    const Point m = labels[v].back();
    parent[v] = oppositeBlock(colorOf(v), m);
    kind[v] = f3.partner(m).isHat() != m.isHat() ? VertexKind::internal
                                                 : VertexKind::nonSeedRoot;
  }

  PermutedForest forest;
  forest.n = n;
  std::map<int, int> loopIds, thornLabels;  // keyed by the smaller point index
  for (int v = 0; v < count; ++v) {
    ForestVertex vertex;
    vertex.id = v;
    vertex.color = colorOf(v);
    vertex.kind = kind[v];
    if (kind[v] == VertexKind::nonSeedRoot) vertex.arrowTo = parent[v];
    for (Point x : labels[v]) {
      if (kind[v] == VertexKind::internal && x == labels[v].back()) continue;
      const Point y = f3.partner(x);
      const int key = std::min(x.index(), y.index());
      if (y.isHat() == x.isHat()) {
        auto [it, fresh] = loopIds.try_emplace(key, int(loopIds.size()));
        vertex.descendants.push_back(
            LoopSlot{it->second, x < y ? LoopEnd::open : LoopEnd::close});
        const bool arrowLoop = kind[v] == VertexKind::nonSeedRoot &&
                               (x == labels[v].back() || y == labels[v].back());
        if (fresh && !arrowLoop) {
          forest.loopAssignments[it->second] = oppositeBlock(vertex.color, x);
        }
        continue;
      }
      const int u = owner[y.index()];
      if (kind[u] == VertexKind::internal && labels[u].back() == y) {
        vertex.descendants.push_back(EdgeSlot{u});
      } else {
        auto [it, fresh] = thornLabels.try_emplace(key, int(thornLabels.size()));
        vertex.descendants.push_back(ThornSlot{it->second});
      }
    }
    forest.vertices.push_back(std::move(vertex));
  }
  return canonicalForm(forest);
}

PartitionedHypermap thetaInverse(const PermutedForest& forest) {
  if (auto violations = validateForest(forest); !violations.empty()) {
    std::string message = "invalid forest:";
    for (const auto& v : violations) message += "\n  " + v;
    throw InvalidForest(message, std::move(violations));
  }
  const auto& vertices = forest.vertices;
  const int count = int(vertices.size());
  const int n = forest.n;
  std::map<int, int> indexOf;
  for (int v = 0; v < count; ++v) indexOf[vertices[v].id] = v;

  std::vector<int> positions(count), parent(count, -1), parentSlot(count, -1);
  std::map<int, std::vector<int>> thornHolders;
  int seed = -1;
  for (int v = 0; v < count; ++v) {
    const auto& vertex = vertices[v];
    positions[v] = int(vertex.descendants.size()) +
                   (vertex.kind == VertexKind::internal ? 1 : 0);
    if (vertex.kind == VertexKind::seedRoot) seed = v;
    for (int p = 0; p < int(vertex.descendants.size()); ++p) {
      const auto& slot = vertex.descendants[p];
      if (const auto* edge = std::get_if<EdgeSlot>(&slot)) {
        parent[indexOf.at(edge->child)] = v;
        parentSlot[indexOf.at(edge->child)] = p;
      } else if (const auto* thorn = std::get_if<ThornSlot>(&slot)) {
        thornHolders[thorn->label].push_back(v);
      }
    }
  }

  // Vertex that receives the label following the one placed at (v, p).
  auto next = [&](int v, int p) {
    const auto& vertex = vertices[v];
    if (p == int(vertex.descendants.size())) return parent[v];
    const auto& slot = vertex.descendants[p];
    if (const auto* edge = std::get_if<EdgeSlot>(&slot)) {
      return indexOf.at(edge->child);
    }
    if (const auto* thorn = std::get_if<ThornSlot>(&slot)) {
      const auto& holders = thornHolders.at(thorn->label);
      return holders[0] == v ? holders[1] : holders[0];
    }
    const auto& loop = std::get<LoopSlot>(slot);
    if (vertex.kind == VertexKind::nonSeedRoot &&
        std::get<LoopSlot>(vertex.descendants.back()).id == loop.id) {
      return indexOf.at(*vertex.arrowTo);
    }
    return indexOf.at(forest.loopAssignments.at(loop.id));
  };

  std::vector<std::vector<Point>> label(count);
  int v = seed;
  for (int t = 0; t < 2 * n; ++t) {
    const int p = int(label[v].size());
    if (p >= positions[v]) {
      throw RecoveryStuck("label " + std::to_string(Point::fromIndex(t).value()) +
                          " has no free position at vertex " +
                          std::to_string(vertices[v].id));
    }
    label[v].push_back(Point::fromIndex(t));
    v = next(v, p);
  }

  std::vector<int> image(2 * n, -1);
  auto join = [&](Point a, Point b) {
    image[a.index()] = b.index();
    image[b.index()] = a.index();
  };
  std::map<int, std::vector<Point>> loopEnds, thornEnds;
  for (int u = 0; u < count; ++u) {
    const auto& vertex = vertices[u];
    for (int p = 0; p < int(vertex.descendants.size()); ++p) {
      const auto& slot = vertex.descendants[p];
      if (const auto* thorn = std::get_if<ThornSlot>(&slot)) {
        thornEnds[thorn->label].push_back(label[u][p]);
      } else if (const auto* loop = std::get_if<LoopSlot>(&slot)) {
        loopEnds[loop->id].push_back(label[u][p]);
      }
    }
    if (vertex.kind == VertexKind::internal) {
      join(label[u].back(), label[parent[u]][parentSlot[u]]);
    }
  }
  for (const auto* ends : {&loopEnds, &thornEnds}) {
    for (const auto& [id, points] : *ends) join(points[0], points[1]);
  }

  const Pairing f1 = canonicalF1(n), f2 = canonicalFStar(n);
  std::vector<std::vector<Point>> whiteBlocks, blackBlocks;
  for (int u = 0; u < count; ++u) {
    const Pairing& side = vertices[u].color == Color::white ? f1 : f2;
    std::vector<Point> block = label[u];
    for (Point x : label[u]) block.push_back(side.partner(x));
    std::sort(block.begin(), block.end());
    (vertices[u].color == Color::white ? whiteBlocks : blackBlocks)
        .push_back(std::move(block));
  }
  PartitionedHypermap map{Pairing(Permutation(image)),
                          SetPartition(n, std::move(whiteBlocks)),
                          SetPartition(n, std::move(blackBlocks))};
  map.validate();
  return map;
}

}  // namespace hyperoct
