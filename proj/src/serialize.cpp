#include "hyperoct/serialize.hpp"

#include <fstream>
#include <sstream>

namespace hyperoct {

Json parseJson(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& error) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < error.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": " + error.what());
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json toJson(const Partition& partition) { return partition.parts(); }

namespace {

template <class T>
T field(const Json& json, const char* name) {
  if (!json.is_object() || !json.contains(name)) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  try {
    return json.at(name).get<T>();
  } catch (const Json::exception& error) {
    throw ParseError(std::string("field \"") + name + "\": " + error.what());
  }
}

VertexKind kindFromString(const std::string& text) {
  if (text == "seedRoot") return VertexKind::seedRoot;
  if (text == "nonSeedRoot") return VertexKind::nonSeedRoot;
  if (text == "internal") return VertexKind::internal;
  throw ParseError("unknown vertex kind \"" + text + "\"");
}

Color colorFromString(const std::string& text) {
  if (text == "white") return Color::white;
  if (text == "black") return Color::black;
  throw ParseError("unknown colour \"" + text + "\"");
}

std::vector<Point> pointsFromJson(const Json& json, int n) {
  std::vector<Point> points;
  for (const auto& value : json) {
    int s = value.get<int>();
    if (s == 0 || s > n || s < -n) {
      throw ParseError("point " + std::to_string(s) + " outside [n] ∪ [n̂]");
    }
    points.push_back(Point(s));
  }
  return points;
}

}  // namespace

Json toJson(const PermutedForest& forest) {
  Json vertices = Json::array();
  for (const auto& vertex : forest.vertices) {
    Json descendants = Json::array();
    for (const auto& slot : vertex.descendants) {
      if (const auto* edge = std::get_if<EdgeSlot>(&slot)) {
        descendants.push_back({{"t", "edge"}, {"child", edge->child}});
      } else if (const auto* thorn = std::get_if<ThornSlot>(&slot)) {
        descendants.push_back({{"t", "thorn"}, {"label", thorn->label}});
      } else {
        const auto& loop = std::get<LoopSlot>(slot);
        descendants.push_back(
            {{"t", "loop"},
             {"id", loop.id},
             {"end", loop.end == LoopEnd::open ? "open" : "close"}});
      }
    }
    Json entry = {{"id", vertex.id},
                  {"color", toString(vertex.color)},
                  {"kind", toString(vertex.kind)},
                  {"descendants", std::move(descendants)}};
    if (vertex.arrowTo) entry["arrowTo"] = *vertex.arrowTo;
    vertices.push_back(std::move(entry));
  }
  Json assignments = Json::object();
  for (const auto& [loop, target] : forest.loopAssignments) {
    assignments[std::to_string(loop)] = target;
  }
  return {{"n", forest.n},
          {"vertices", std::move(vertices)},
          {"loopAssignments", std::move(assignments)}};
}

PermutedForest forestFromJson(const Json& json) {
  PermutedForest forest;
  forest.n = field<int>(json, "n");
  for (const auto& entry : field<Json>(json, "vertices")) {
    ForestVertex vertex;
    vertex.id = field<int>(entry, "id");
    vertex.color = colorFromString(field<std::string>(entry, "color"));
    vertex.kind = kindFromString(field<std::string>(entry, "kind"));
    if (entry.contains("arrowTo") && !entry["arrowTo"].is_null()) {
      vertex.arrowTo = field<int>(entry, "arrowTo");
    }
    for (const auto& slot : field<Json>(entry, "descendants")) {
      const auto type = field<std::string>(slot, "t");
      if (type == "edge") {
        vertex.descendants.push_back(EdgeSlot{field<int>(slot, "child")});
      } else if (type == "thorn") {
        vertex.descendants.push_back(ThornSlot{field<int>(slot, "label")});
      } else if (type == "loop") {
        const auto end = field<std::string>(slot, "end");
        if (end != "open" && end != "close") {
          throw ParseError("loop end must be \"open\" or \"close\"");
        }
        vertex.descendants.push_back(
            LoopSlot{field<int>(slot, "id"),
                     end == "open" ? LoopEnd::open : LoopEnd::close});
      } else {
        throw ParseError("unknown descendant type \"" + type + "\"");
      }
    }
    forest.vertices.push_back(std::move(vertex));
  }
  if (json.contains("loopAssignments")) {
    for (const auto& [key, value] : json["loopAssignments"].items()) {
      try {
        forest.loopAssignments[std::stoi(key)] = value.get<int>();
      } catch (const std::exception&) {
        throw ParseError("bad loop assignment \"" + key + "\"");
      }
    }
  }
  return forest;
}

Json toJson(const PartitionedHypermap& map) {
  Json pairs = Json::array();
  for (const auto& [a, b] : map.edges.pairs()) {
    pairs.push_back({a.value(), b.value()});
  }
  auto blocks = [](const SetPartition& partition) {
    Json out = Json::array();
    for (const auto& block : partition.blocks()) {
      Json points = Json::array();
      for (Point x : block) points.push_back(x.value());
      out.push_back(std::move(points));
    }
    return out;
  };
  return {{"n", map.n()},
          {"f3", std::move(pairs)},
          {"pi1", blocks(map.whiteBlocks)},
          {"pi2", blocks(map.blackBlocks)}};
}

PartitionedHypermap hypermapFromJson(const Json& json) {
  const int n = field<int>(json, "n");
  if (n < 1) throw ParseError("n must be positive");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& pair : field<Json>(json, "f3")) {
    auto points = pointsFromJson(pair, n);
    if (points.size() != 2) throw ParseError("f3 entries must be pairs");
    pairs.emplace_back(points[0].value(), points[1].value());
  }
  auto blocks = [&](const char* name) {
    std::vector<std::vector<Point>> out;
    for (const auto& block : field<Json>(json, name)) {
      out.push_back(pointsFromJson(block, n));
    }
    return out;
  };
  try {
    PartitionedHypermap map{Pairing::fromPairs(n, pairs),
                            SetPartition(n, blocks("pi1")),
                            SetPartition(n, blocks("pi2"))};
    map.validate();
    return map;
  } catch (const std::invalid_argument& error) {
    throw ParseError(std::string("invalid triple: ") + error.what());
  }
}

Json toJson(const SymSeries& series) {
  Json entries = Json::array();
  for (const auto& [key, value] : series.coefficients()) {
    entries.push_back({{"lambda", toJson(key.first)},
                       {"mu", toJson(key.second)},
                       {"value", toString(value)}});
  }
  return {{"basis", toString(series.basis())},
          {"n", series.n()},
          {"entries", std::move(entries)}};
}

namespace {

std::string plusJoined(const Partition& partition) {
  std::string out;
  for (int part : partition) {
    if (!out.empty()) out += '+';
    out += std::to_string(part);
  }
  return out;
}

}  // namespace

std::string tableToCsv(const CountTable& table) {
  std::string out = "lambda,mu,count\n";
  for (const auto& [key, count] : table) {
    out += plusJoined(key.first) + "," + plusJoined(key.second) + "," +
           toString(count) + "\n";
  }
  return out;
}

Json tableToJson(const CountTable& table) {
  Json out = Json::object();
  for (const auto& [key, count] : table) {
    out[key.first.toString()][key.second.toString()] = toString(count);
  }
  return out;
}

Json toJson(const DegreeArray& a) {
  auto counts = [](const DegreeCounts& c) {
    Json out = Json::array();
    for (const auto& [key, count] : c) {
      out.push_back({{"i", key.degree},
                     {"j", key.arrows},
                     {"k", key.extraLoops},
                     {"count", count}});
    }
    return out;
  };
  return {{"P", counts(a.white)},
          {"Pprime", counts(a.whiteRoots)},
          {"Q", counts(a.black)},
          {"Qprime", counts(a.blackRoots)}};
}

}  // namespace hyperoct
