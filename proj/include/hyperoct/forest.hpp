#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperoct/degree_array.hpp"

namespace hyperoct {

enum class Color { white, black };
enum class VertexKind { seedRoot, nonSeedRoot, internal };
enum class LoopEnd { open, close };

std::string toString(Color color);
std::string toString(VertexKind kind);

struct EdgeSlot {
  int child = 0;
  friend auto operator<=>(const EdgeSlot&, const EdgeSlot&) = default;
};
/// A thorn carries a latin label shared with exactly one thorn of the other
/// colour; the two form a thorn pair.
struct ThornSlot {
  int label = 0;
  friend auto operator<=>(const ThornSlot&, const ThornSlot&) = default;
};
struct LoopSlot {
  int id = 0;
  LoopEnd end = LoopEnd::open;
  friend auto operator<=>(const LoopSlot&, const LoopSlot&) = default;
};
using Slot = std::variant<EdgeSlot, ThornSlot, LoopSlot>;

struct ForestVertex {
  int id = 0;
  Color color = Color::white;
  VertexKind kind = VertexKind::internal;
  std::vector<Slot> descendants;
  std::optional<int> arrowTo;  // nonSeedRoot only

  friend auto operator<=>(const ForestVertex&, const ForestVertex&) = default;
};

/// Loop ids and thorn labels are symbolic. Forests compare equal as values
/// only after canonicalForm().
struct PermutedForest {
  int n = 0;
  std::vector<ForestVertex> vertices;
  /// Greek labels: loop id -> vertex id. The maximal loop of a nonSeedRoot is
  /// replaced by its arrow and has no entry.
  std::map<int, int> loopAssignments;

  friend auto operator<=>(const PermutedForest&,
                          const PermutedForest&) = default;
};

/// Empty iff the forest is valid. Each entry names the failed property and
/// the vertex or loop involved.
std::vector<std::string> validateForest(const PermutedForest& forest);

/// Degree i of a vertex is its number of descendant slots, plus one for the
/// edge to its parent; a loop occupies two slots.
DegreeArray forestDegree(const PermutedForest& forest);

/// Relabelled form: vertices renumbered in depth-first order from the seed
/// root (edge children in slot order, then arrow children), thorn labels and
/// loop ids numbered by first appearance. Arrow children are unordered, so the
/// least result over their orderings is taken. Throws std::invalid_argument
/// if edges and arrows do not form a tree on all vertices.
PermutedForest canonicalForm(const PermutedForest& forest);

/// Every valid forest of degree A, in canonical form and sorted. Oracle
/// scale only: the cost grows super-exponentially with n(A).
std::vector<PermutedForest> enumerateForests(const DegreeArray& a);

}  // namespace hyperoct
