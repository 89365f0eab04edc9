#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>

#include "hyperoct/bigint.hpp"

namespace hyperoct {

/// Index (i, j, k) of a degree-array entry: a vertex (block) of half size i
/// with j incoming arrows and j + k loops in total.
struct DegreeKey {
  int degree = 0;
  int arrows = 0;
  int extraLoops = 0;

  int loops() const { return arrows + extraLoops; }
  friend auto operator<=>(const DegreeKey&, const DegreeKey&) = default;
};

/// Sparse multiplicity array over DegreeKey. Zero entries are never stored.
using DegreeCounts = std::map<DegreeKey, int>;

/// The degree array A = (P, P', Q, Q') shared by partitioned hypermaps,
/// permuted forests and the closed-form count.
///
///   white      = P : white non-root vertices, including the seed root
///   whiteRoots = P': white roots of non-seed trees
///   black      = Q : black non-root vertices
///   blackRoots = Q': black roots of non-seed trees
struct DegreeArray {
  DegreeCounts white;
  DegreeCounts whiteRoots;
  DegreeCounts black;
  DegreeCounts blackRoots;

  /// E_{i,j,k} added to the chosen array.
  static void add(DegreeCounts& counts, DegreeKey key, int times = 1);

  int whiteCount() const;      // p
  int whiteRootCount() const;  // p'
  int blackCount() const;      // q
  int blackRootCount() const;  // q'
  /// r evaluated on the white side: Σ (j+k)(P + P').
  int loopPairs() const;
  /// r evaluated on the black side: Σ (j+k)(Q + Q').
  int loopPairsBlack() const;
  /// Half size n(A) = Σ i (P + P').
  int halfSize() const;

  /// A! = ∏ P_{ijk}! P'_{ijk}! Q_{ijk}! Q'_{ijk}!
  BigInt automorphism() const;

  /// "P=E_{4,1,0}+E_{3,0,1};P'=0;Q=...;Q'=..."
  std::string toString() const;

  friend bool operator==(const DegreeArray&, const DegreeArray&) = default;
  friend auto operator<=>(const DegreeArray&, const DegreeArray&) = default;
};

std::ostream& operator<<(std::ostream& out, const DegreeArray& a);

/// Σ over entries of weight(key) · count.
template <class Weight>
long weightedSum(const DegreeCounts& counts, Weight weight) {
  long total = 0;
  for (const auto& [key, count] : counts) total += long(weight(key)) * count;
  return total;
}

}  // namespace hyperoct
