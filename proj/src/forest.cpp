#include "hyperoct/forest.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace hyperoct {

std::string toString(Color color) {
  return color == Color::white ? "white" : "black";
}

std::string toString(VertexKind kind) {
  switch (kind) {
    case VertexKind::seedRoot:
      return "seedRoot";
    case VertexKind::nonSeedRoot:
      return "nonSeedRoot";
    case VertexKind::internal:
      return "internal";
  }
  return "unknown";
}

namespace {

std::string vertexName(const ForestVertex& v) {
  return "vertex " + std::to_string(v.id);
}

int slotCount(const ForestVertex& v) { return int(v.descendants.size()); }

int loopSlots(const ForestVertex& v) {
  int count = 0;
  for (const auto& slot : v.descendants) {
    count += std::holds_alternative<LoopSlot>(slot) ? 1 : 0;
  }
  return count;
}

// Loop id on the rightmost slot of a nonSeedRoot, if any.
std::optional<int> maximalLoop(const ForestVertex& v) {
  if (v.kind != VertexKind::nonSeedRoot || v.descendants.empty()) return {};
  if (const auto* loop = std::get_if<LoopSlot>(&v.descendants.back())) {
    return loop->id;
  }
  return {};
}

}  // namespace

std::vector<std::string> validateForest(const PermutedForest& forest) {
  std::vector<std::string> violations;
  auto fail = [&](std::string message) {
    violations.push_back(std::move(message));
  };
  const auto& vertices = forest.vertices;
  std::map<int, int> indexOf;
  for (int v = 0; v < int(vertices.size()); ++v) {
    if (!indexOf.emplace(vertices[v].id, v).second) {
      fail("duplicate vertex id " + std::to_string(vertices[v].id));
    }
  }
  if (!violations.empty()) return violations;

  int seeds = 0;
  for (const auto& v : vertices) {
    if (v.kind != VertexKind::seedRoot) continue;
    ++seeds;
    if (v.color != Color::white) fail("seed root " + vertexName(v) + " is black");
  }
  if (seeds != 1) fail("expected one seed root, found " + std::to_string(seeds));

  // parent[v]: index of the vertex holding the edge or receiving the arrow.
  std::vector<int> parent(vertices.size(), -1);
  std::vector<int> edgeParents(vertices.size(), 0);
  std::vector<int> incomingArrows(vertices.size(), 0);
  struct LoopInfo {
    int owner = -1;
    int opens = 0, closes = 0;
    bool closedFirst = false;
    bool shared = false;
  };
  std::map<int, LoopInfo> loops;
  std::map<int, std::vector<Color>> thorns;
  bool structural = true;

  for (int v = 0; v < int(vertices.size()); ++v) {
    const auto& vertex = vertices[v];
    if (vertex.kind == VertexKind::nonSeedRoot) {
      if (!vertex.arrowTo) {
        fail(vertexName(vertex) + ": non-seed root without arrow");
        structural = false;
      } else if (!indexOf.count(*vertex.arrowTo)) {
        fail(vertexName(vertex) + ": arrow to unknown vertex " +
             std::to_string(*vertex.arrowTo));
        structural = false;
      } else {
        int target = indexOf[*vertex.arrowTo];
        if (vertices[target].color == vertex.color) {
          fail(vertexName(vertex) + ": arrow to a vertex of the same colour");
        }
        parent[v] = target;
        ++incomingArrows[target];
      }
      // The rightmost descendant closes the loop that becomes the arrow.
      if (!maximalLoop(vertex)) {
        fail(vertexName(vertex) +
             ": rightmost descendant of a non-seed root is not a loop");
      }
    } else if (vertex.arrowTo) {
      fail(vertexName(vertex) + ": arrow on a vertex that is not a non-seed root");
    }
    for (const auto& slot : vertex.descendants) {
      if (const auto* edge = std::get_if<EdgeSlot>(&slot)) {
        auto it = indexOf.find(edge->child);
        if (it == indexOf.end()) {
          fail(vertexName(vertex) + ": edge to unknown vertex " +
               std::to_string(edge->child));
          structural = false;
          continue;
        }
        const auto& child = vertices[it->second];
        if (child.color == vertex.color) {
          fail(vertexName(vertex) + ": edge to " + vertexName(child) +
               " of the same colour");
        }
        if (child.kind != VertexKind::internal) {
          fail(vertexName(vertex) + ": edge to root " + vertexName(child));
          structural = false;
        }
        parent[it->second] = v;
        ++edgeParents[it->second];
      } else if (const auto* thorn = std::get_if<ThornSlot>(&slot)) {
        thorns[thorn->label].push_back(vertex.color);
      } else {
        const auto& loop = std::get<LoopSlot>(slot);
        LoopInfo& info = loops[loop.id];
        if (info.owner >= 0 && info.owner != v) info.shared = true;
        info.owner = v;
        if (loop.end == LoopEnd::open) {
          ++info.opens;
        } else {
          if (info.opens == 0) info.closedFirst = true;
          ++info.closes;
        }
      }
    }
  }
  for (int v = 0; v < int(vertices.size()); ++v) {
    if (vertices[v].kind == VertexKind::internal && edgeParents[v] != 1) {
      fail(vertexName(vertices[v]) + ": internal vertex with " +
           std::to_string(edgeParents[v]) + " parent edges");
      structural = false;
    }
  }

  int whiteLoops = 0, blackLoops = 0;
  for (const auto& [id, info] : loops) {
    if (info.shared || info.opens != 1 || info.closes != 1 || info.closedFirst) {
      fail("loop " + std::to_string(id) +
           ": must have one open end followed by one close end on one vertex");
      continue;
    }
    (vertices[info.owner].color == Color::white ? whiteLoops : blackLoops) += 1;
  }
  // Loops balance between the colours.
  if (whiteLoops != blackLoops) {
    fail("white vertices carry " + std::to_string(whiteLoops) +
         " loops, black vertices " + std::to_string(blackLoops));
  }
  // Thorns come in white/black pairs.
  for (const auto& [label, colors] : thorns) {
    if (colors.size() != 2 || colors[0] == colors[1]) {
      fail("thorn " + std::to_string(label) +
           ": must pair one white thorn with one black thorn");
    }
  }

  // Every loop carries a greek label except the arrow loops.
  std::vector<int> greekCount(vertices.size(), 0);
  std::set<int> arrowLoops;
  for (const auto& v : vertices) {
    if (auto id = maximalLoop(v)) arrowLoops.insert(*id);
  }
  for (const auto& [id, info] : loops) {
    if (arrowLoops.count(id)) {
      if (forest.loopAssignments.count(id)) {
        fail("loop " + std::to_string(id) +
             ": maximal loop of a non-seed root must not carry a greek label");
      }
    } else if (!forest.loopAssignments.count(id)) {
      fail("loop " + std::to_string(id) + ": no greek label");
    }
  }
  for (const auto& [id, target] : forest.loopAssignments) {
    auto loop = loops.find(id);
    auto it = indexOf.find(target);
    if (loop == loops.end()) {
      fail("greek label on unknown loop " + std::to_string(id));
      continue;
    }
    if (it == indexOf.end()) {
      fail("loop " + std::to_string(id) + ": greek label names unknown vertex " +
           std::to_string(target));
      continue;
    }
    if (loop->second.owner >= 0 &&
        vertices[loop->second.owner].color == vertices[it->second].color) {
      fail("loop " + std::to_string(id) +
           ": greek label names a vertex of the same colour");
    }
    ++greekCount[it->second];
  }
  for (int v = 0; v < int(vertices.size()); ++v) {
    int own = loopSlots(vertices[v]) / 2;
    if (greekCount[v] + incomingArrows[v] != own) {
      fail(vertexName(vertices[v]) + ": " + std::to_string(greekCount[v]) +
           " greek labels and " + std::to_string(incomingArrows[v]) +
           " arrows received but " + std::to_string(own) + " own loops");
    }
  }

  // Edges and arrows form a tree rooted at the seed root.
  if (structural && seeds == 1) {
    for (int v = 0; v < int(vertices.size()); ++v) {
      std::vector<char> seen(vertices.size(), 0);
      int x = v;
      while (x >= 0 && vertices[x].kind != VertexKind::seedRoot) {
        if (seen[x]) break;
        seen[x] = 1;
        x = parent[x];
      }
      if (x < 0 || vertices[x].kind != VertexKind::seedRoot) {
        fail(vertexName(vertices[v]) +
             ": edges and arrows do not lead to the seed root");
      }
    }
  }

  int whiteSize = 0, blackSize = 0;
  for (const auto& v : vertices) {
    int degree = slotCount(v) + (v.kind == VertexKind::internal ? 1 : 0);
    (v.color == Color::white ? whiteSize : blackSize) += degree;
  }
  if (whiteSize != forest.n || blackSize != forest.n) {
    fail("white and black degrees sum to " + std::to_string(whiteSize) + " and " +
         std::to_string(blackSize) + ", expected n = " + std::to_string(forest.n));
  }
  return violations;
}

DegreeArray forestDegree(const PermutedForest& forest) {
  std::map<int, int> indexOf;
  for (int v = 0; v < int(forest.vertices.size()); ++v) {
    indexOf[forest.vertices[v].id] = v;
  }
  std::vector<int> incoming(forest.vertices.size(), 0);
  for (const auto& v : forest.vertices) {
    if (v.arrowTo) ++incoming[indexOf.at(*v.arrowTo)];
  }
  DegreeArray a;
  for (int v = 0; v < int(forest.vertices.size()); ++v) {
    const auto& vertex = forest.vertices[v];
    const int degree =
        slotCount(vertex) + (vertex.kind == VertexKind::internal ? 1 : 0);
    const int loops = loopSlots(vertex) / 2;
    const DegreeKey key{degree, incoming[v], loops - incoming[v]};
    const bool root = vertex.kind == VertexKind::nonSeedRoot;
    if (vertex.color == Color::white) {
      DegreeArray::add(root ? a.whiteRoots : a.white, key);
    } else {
      DegreeArray::add(root ? a.blackRoots : a.black, key);
    }
  }
  return a;
}

namespace {

PermutedForest relabel(const PermutedForest& forest,
                       const std::vector<int>& order,
                       const std::map<int, int>& indexOf) {
  std::vector<int> newId(forest.vertices.size());
  for (int position = 0; position < int(order.size()); ++position) {
    newId[order[position]] = position;
  }
  std::map<int, int> thornLabel, loopId;
  PermutedForest out;
  out.n = forest.n;
  for (int v : order) {
    const auto& vertex = forest.vertices[v];
    ForestVertex copy;
    copy.id = newId[v];
    copy.color = vertex.color;
    copy.kind = vertex.kind;
    if (vertex.arrowTo) copy.arrowTo = newId[indexOf.at(*vertex.arrowTo)];
    for (const auto& slot : vertex.descendants) {
      if (const auto* edge = std::get_if<EdgeSlot>(&slot)) {
        copy.descendants.push_back(EdgeSlot{newId[indexOf.at(edge->child)]});
      } else if (const auto* thorn = std::get_if<ThornSlot>(&slot)) {
        auto [it, unused] = thornLabel.try_emplace(thorn->label,
                                                   int(thornLabel.size()));
        copy.descendants.push_back(ThornSlot{it->second});
      } else {
        const auto& loop = std::get<LoopSlot>(slot);
        auto [it, unused] = loopId.try_emplace(loop.id, int(loopId.size()));
        copy.descendants.push_back(LoopSlot{it->second, loop.end});
      }
    }
    out.vertices.push_back(std::move(copy));
  }
  for (const auto& [id, target] : forest.loopAssignments) {
    auto it = loopId.find(id);
    if (it == loopId.end()) {
      throw std::invalid_argument("greek label on unknown loop " +
                                  std::to_string(id));
    }
    out.loopAssignments[it->second] = newId[indexOf.at(target)];
  }
  return out;
}

}  // namespace

PermutedForest canonicalForm(const PermutedForest& forest) {
  const auto& vertices = forest.vertices;
  const int count = int(vertices.size());
  std::map<int, int> indexOf;
  for (int v = 0; v < count; ++v) indexOf[vertices[v].id] = v;
  int seed = -1;
  std::vector<std::vector<int>> arrowChildren(count);
  for (int v = 0; v < count; ++v) {
    if (vertices[v].kind == VertexKind::seedRoot) {
      if (seed >= 0) throw std::invalid_argument("more than one seed root");
      seed = v;
    }
    if (vertices[v].arrowTo) {
      auto it = indexOf.find(*vertices[v].arrowTo);
      if (it == indexOf.end()) throw std::invalid_argument("arrow to unknown vertex");
      arrowChildren[it->second].push_back(v);
    }
  }
  if (seed < 0) throw std::invalid_argument("no seed root");

  std::vector<int> withArrows;
  for (int v = 0; v < count; ++v) {
    if (!arrowChildren[v].empty()) withArrows.push_back(v);
  }
  std::optional<PermutedForest> best;
  std::vector<int> order;
  std::vector<char> seen(count);
  std::function<void(int)> visit = [&](int v) {
    if (seen[v]) throw std::invalid_argument("edges and arrows contain a cycle");
    seen[v] = 1;
    order.push_back(v);
    for (const auto& slot : vertices[v].descendants) {
      if (const auto* edge = std::get_if<EdgeSlot>(&slot)) {
        auto it = indexOf.find(edge->child);
        if (it == indexOf.end()) throw std::invalid_argument("edge to unknown vertex");
        visit(it->second);
      }
    }
    for (int child : arrowChildren[v]) visit(child);
  };
  // Odometer over the orderings of each arrow-children list.
  while (true) {
    order.clear();
    std::fill(seen.begin(), seen.end(), 0);
    visit(seed);
    if (int(order.size()) != count) {
      throw std::invalid_argument("edges and arrows do not reach every vertex");
    }
    PermutedForest candidate = relabel(forest, order, indexOf);
    if (!best || candidate < *best) best = std::move(candidate);
    std::size_t digit = 0;
    while (digit < withArrows.size()) {
      auto& list = arrowChildren[withArrows[digit]];
      if (std::next_permutation(list.begin(), list.end())) break;
      ++digit;  // list wrapped back to sorted order
    }
    if (digit == withArrows.size()) break;
  }
  return *best;
}

namespace {

struct Blueprint {
  Color color;
  VertexKind kind;
  DegreeKey key;
};

// partner[p] = q for loop ends p, q; -1 on slots left for edges and thorns.
using LoopLayout = std::vector<int>;

void perfectMatchings(std::vector<int> points, LoopLayout& layout,
                      std::vector<LoopLayout>& out) {
  if (points.empty()) {
    out.push_back(layout);
    return;
  }
  const int first = points[0];
  for (std::size_t i = 1; i < points.size(); ++i) {
    const int second = points[i];
    std::vector<int> rest;
    for (std::size_t t = 1; t < points.size(); ++t) {
      if (t != i) rest.push_back(points[t]);
    }
    layout[first] = second;
    layout[second] = first;
    perfectMatchings(rest, layout, out);
    layout[first] = layout[second] = -1;
  }
}

std::vector<LoopLayout> loopLayouts(int slots, int loopEnds, bool lastIsLoop) {
  std::vector<LoopLayout> out;
  std::vector<int> chosen;
  std::function<void(int)> choose = [&](int from) {
    if (int(chosen.size()) == loopEnds) {
      if (lastIsLoop && (chosen.empty() || chosen.back() != slots - 1)) return;
      LoopLayout layout(slots, -1);
      perfectMatchings(chosen, layout, out);
      return;
    }
    for (int p = from; p < slots; ++p) {
      chosen.push_back(p);
      choose(p + 1);
      chosen.pop_back();
    }
  };
  choose(0);
  return out;
}

class ForestEnumerator {
 public:
  ForestEnumerator(std::vector<Blueprint> blueprint, int n)
      : bp_(std::move(blueprint)), n_(n), count_(int(bp_.size())) {}

  void run(std::set<PermutedForest>& out) {
    out_ = &out;
    layouts_.clear();
    for (const auto& b : bp_) {
      const int slots = b.key.degree - (b.kind == VertexKind::internal ? 1 : 0);
      const int ends = 2 * b.key.loops();
      if (slots < ends || (b.kind == VertexKind::nonSeedRoot && ends == 0)) {
        return;
      }
      layouts_.push_back(
          loopLayouts(slots, ends, b.kind == VertexKind::nonSeedRoot));
      if (layouts_.back().empty()) return;
    }
    for (int v = 0; v < count_; ++v) {
      if (bp_[v].kind == VertexKind::internal) internal_.push_back(v);
      if (bp_[v].kind == VertexKind::nonSeedRoot) roots_.push_back(v);
    }
    choice_.assign(count_, nullptr);
    chooseLayouts(0);
  }

 private:
  void chooseLayouts(int v) {
    if (v == count_) {
      free_.clear();
      for (int u = 0; u < count_; ++u) {
        for (int p = 0; p < int(choice_[u]->size()); ++p) {
          if ((*choice_[u])[p] < 0) free_.emplace_back(u, p);
        }
      }
      parentSlot_.assign(count_, {-1, -1});
      used_.assign(free_.size(), 0);
      assignParents(0);
      return;
    }
    for (const auto& layout : layouts_[v]) {
      choice_[v] = &layout;
      chooseLayouts(v + 1);
    }
  }

  void assignParents(std::size_t index) {
    if (index == internal_.size()) {
      whiteThorns_.clear();
      blackThorns_.clear();
      for (std::size_t s = 0; s < free_.size(); ++s) {
        if (used_[s]) continue;
        (bp_[free_[s].first].color == Color::white ? whiteThorns_
                                                   : blackThorns_)
            .push_back(free_[s]);
      }
      if (whiteThorns_.size() != blackThorns_.size()) return;
      arrow_.assign(count_, -1);
      incoming_.assign(count_, 0);
      assignArrows(0);
      return;
    }
    const int u = internal_[index];
    for (std::size_t s = 0; s < free_.size(); ++s) {
      if (used_[s] || bp_[free_[s].first].color == bp_[u].color) continue;
      used_[s] = 1;
      parentSlot_[u] = free_[s];
      assignParents(index + 1);
      used_[s] = 0;
    }
    parentSlot_[u] = {-1, -1};
  }

  void assignArrows(std::size_t index) {
    if (index == roots_.size()) {
      for (int u = 0; u < count_; ++u) {
        if (incoming_[u] != bp_[u].key.arrows) return;
      }
      if (!reachesSeed()) return;
      greekLoops_.clear();
      for (int u = 0; u < count_; ++u) {
        const auto& layout = *choice_[u];
        for (int p = 0; p < int(layout.size()); ++p) {
          if (layout[p] <= p) continue;
          if (bp_[u].kind == VertexKind::nonSeedRoot &&
              layout[p] == int(layout.size()) - 1) {
            continue;
          }
          greekLoops_.emplace_back(u, p);
        }
      }
      greek_.assign(greekLoops_.size(), -1);
      received_.assign(count_, 0);
      assignGreek(0);
      return;
    }
    const int v = roots_[index];
    for (int target = 0; target < count_; ++target) {
      if (bp_[target].color == bp_[v].color) continue;
      if (incoming_[target] >= bp_[target].key.arrows) continue;
      arrow_[v] = target;
      ++incoming_[target];
      assignArrows(index + 1);
      --incoming_[target];
    }
    arrow_[v] = -1;
  }

  bool reachesSeed() const {
    for (int v = 0; v < count_; ++v) {
      int x = v, steps = 0;
      while (bp_[x].kind != VertexKind::seedRoot) {
        if (++steps > count_) return false;
        x = bp_[x].kind == VertexKind::internal ? parentSlot_[x].first
                                                : arrow_[x];
      }
    }
    return true;
  }

  void assignGreek(std::size_t index) {
    if (index == greekLoops_.size()) {
      for (int u = 0; u < count_; ++u) {
        if (received_[u] != bp_[u].key.extraLoops) return;
      }
      emitThornMatchings();
      return;
    }
    const int owner = greekLoops_[index].first;
    for (int target = 0; target < count_; ++target) {
      if (bp_[target].color == bp_[owner].color) continue;
      if (received_[target] >= bp_[target].key.extraLoops) continue;
      greek_[index] = target;
      ++received_[target];
      assignGreek(index + 1);
      --received_[target];
    }
  }

  void emitThornMatchings() {
    std::vector<int> matching(blackThorns_.size());
    for (std::size_t t = 0; t < matching.size(); ++t) matching[t] = int(t);
    do {
      PermutedForest forest;
      forest.n = n_;
      std::map<std::pair<int, int>, int> loopIds;
      for (int u = 0; u < count_; ++u) {
        const auto& layout = *choice_[u];
        ForestVertex vertex;
        vertex.id = u;
        vertex.color = bp_[u].color;
        vertex.kind = bp_[u].kind;
        vertex.descendants.resize(layout.size());
        for (int p = 0; p < int(layout.size()); ++p) {
          if (layout[p] < 0) continue;
          const int open = std::min(p, layout[p]);
          auto [it, unused] =
              loopIds.try_emplace({u, open}, int(loopIds.size()));
          vertex.descendants[p] =
              LoopSlot{it->second, p == open ? LoopEnd::open : LoopEnd::close};
        }
        if (bp_[u].kind == VertexKind::nonSeedRoot) vertex.arrowTo = arrow_[u];
        forest.vertices.push_back(std::move(vertex));
      }
      for (int u : internal_) {
        auto [v, p] = parentSlot_[u];
        forest.vertices[v].descendants[p] = EdgeSlot{u};
      }
      for (std::size_t t = 0; t < whiteThorns_.size(); ++t) {
        auto [v, p] = whiteThorns_[t];
        forest.vertices[v].descendants[p] = ThornSlot{int(t)};
      }
      for (std::size_t t = 0; t < blackThorns_.size(); ++t) {
        auto [v, p] = blackThorns_[t];
        forest.vertices[v].descendants[p] = ThornSlot{matching[t]};
      }
      for (std::size_t g = 0; g < greekLoops_.size(); ++g) {
        forest.loopAssignments[loopIds.at(greekLoops_[g])] = greek_[g];
      }
      out_->insert(canonicalForm(forest));
    } while (std::next_permutation(matching.begin(), matching.end()));
  }

  std::vector<Blueprint> bp_;
  int n_;
  int count_;
  std::set<PermutedForest>* out_ = nullptr;
  std::vector<std::vector<LoopLayout>> layouts_;
  std::vector<const LoopLayout*> choice_;
  std::vector<int> internal_, roots_;
  std::vector<std::pair<int, int>> free_;
  std::vector<char> used_;
  std::vector<std::pair<int, int>> parentSlot_;
  std::vector<std::pair<int, int>> whiteThorns_, blackThorns_;
  std::vector<int> arrow_, incoming_;
  std::vector<std::pair<int, int>> greekLoops_;
  std::vector<int> greek_, received_;
};

}  // namespace

std::vector<PermutedForest> enumerateForests(const DegreeArray& a) {
  std::vector<Blueprint> base;
  auto append = [&](const DegreeCounts& counts, Color color, VertexKind kind) {
    for (const auto& [key, count] : counts) {
      for (int t = 0; t < count; ++t) base.push_back({color, kind, key});
    }
  };
  append(a.white, Color::white, VertexKind::internal);
  append(a.whiteRoots, Color::white, VertexKind::nonSeedRoot);
  append(a.black, Color::black, VertexKind::internal);
  append(a.blackRoots, Color::black, VertexKind::nonSeedRoot);

  std::set<PermutedForest> found;
  for (const auto& [seedKey, unused] : a.white) {
    auto blueprint = base;
    for (auto& b : blueprint) {
      if (b.color == Color::white && b.kind == VertexKind::internal &&
          b.key == seedKey) {
        b.kind = VertexKind::seedRoot;
        break;
      }
    }
    ForestEnumerator(std::move(blueprint), a.halfSize()).run(found);
  }
  return {found.begin(), found.end()};
}

}  // namespace hyperoct
