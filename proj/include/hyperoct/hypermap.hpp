#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hyperoct/degree_array.hpp"
#include "hyperoct/partition.hpp"
#include "hyperoct/permutation.hpp"

namespace hyperoct {

/// Coefficient table indexed by a pair of partitions of the same n.
using CountTable = std::map<PartitionPair, BigInt>;

/// White vertices are the cycles of f_3∘f_1, black ones the cycles of
/// f_3∘f_2 (f_1, f_2 canonical).
enum class Side { white = 1, black = 2 };

/// The unicellular hypermap determined by its edge pairing f_3. Returns the
/// white and black vertex degree distributions (λ, μ).
PartitionPair vertexDistributions(const Pairing& edges);

/// L^n_{λ,μ}: number of pairings f_3 with f_3∘f_1 ∈ C_{λλ} and f_3∘f_2 ∈ C_{μμ}.
CountTable countL(int n);

/// True iff f_3 pairs every non-hat point with a hat point.
bool isOrientable(const Pairing& edges);

/// Orbits of ⟨f_i, f_3⟩ (i = 1 for white, 2 for black), each sorted, listed by
/// smallest point. Blocks of a stable set partition are unions of orbits.
std::vector<std::vector<Point>> stableOrbits(const Pairing& edges, Side side);

/// A set partition of [n] ∪ [n̂] whose blocks have even size and as many hat
/// as non-hat points. Blocks are kept sorted and ordered by smallest point.
class SetPartition {
 public:
  SetPartition() = default;
  /// Throws std::invalid_argument if the blocks do not cover the 2n points
  /// exactly once, or a block breaks the hat/non-hat balance.
  SetPartition(int n, std::vector<std::vector<Point>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<Point>>& blocks() const { return blocks_; }
  /// Index of the block containing x.
  int blockOf(Point x) const { return owner_[x.index()]; }
  /// Block sizes halved.
  Partition halfType() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Point>> blocks_;
  std::vector<int> owner_;
};

/// Every block is a union of orbits of ⟨f_i, f_3⟩.
bool isStable(const SetPartition& partition, const Pairing& edges, Side side);

/// A locally orientable partitioned hypermap (f_3, π_1, π_2).
struct PartitionedHypermap {
  Pairing edges;
  SetPartition whiteBlocks;
  SetPartition blackBlocks;

  int n() const { return edges.n(); }
  /// Throws std::invalid_argument unless π_1 is stable by f_1, f_3 and π_2
  /// by f_2, f_3.
  void validate() const;

  friend bool operator==(const PartitionedHypermap&,
                         const PartitionedHypermap&) = default;
};

/// All stable set partitions for one side, built as set partitions of the
/// orbit family.
std::vector<SetPartition> stablePartitions(const Pairing& edges, Side side);

void forEachPartitionedHypermap(
    int n, const std::function<void(const PartitionedHypermap&)>& visit);
std::vector<PartitionedHypermap> enumeratePartitionedHypermaps(int n);

/// Counts of partitioned hypermaps grouped by half-types and by degree array.
struct LpCensus {
  long total = 0;
  CountTable byType;
  std::map<DegreeArray, BigInt> byDegree;
};
LpCensus partitionedHypermapCensus(int n);

/// (P, P', Q, Q') of a partitioned hypermap.
DegreeArray degreeStatistics(const PartitionedHypermap& map);

/// Representative of K_ν used by the coset oracle: w_(n) when it lies in K_ν
/// (ν = (n) with n odd), otherwise the lexicographically least w (by image
/// sequence) in K_ν.
Permutation cosetRepresentative(const Partition& nu);

/// b^ν_{λ,μ} counted by scanning S_{2n}; the table covers all (λ, μ) for the
/// fixed ν in one pass.
CountTable bruteForceBTable(const Partition& nu);
BigInt bruteForceB(const Partition& nu, const Partition& lambda,
                   const Partition& mu);

}  // namespace hyperoct
