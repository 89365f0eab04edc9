#pragma once

#include <stdexcept>

#include "hyperoct/forest.hpp"
#include "hyperoct/hypermap.hpp"

namespace hyperoct {

/// The label recovery reached a vertex with no free position left.
class RecoveryStuck : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a forest handed to thetaInverse() fails validateForest().
class InvalidForest : public std::invalid_argument {
 public:
  InvalidForest(const std::string& what, std::vector<std::string> violations)
      : std::invalid_argument(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Θ_A: the forest of a partitioned hypermap, in canonical form. Vertex i of
/// the result has degree given by the half size of the matching block.
PermutedForest thetaForward(const PartitionedHypermap& map);

/// Recovers the integer labels 1, 1̂, 2, 2̂, ... by walking the forest from
/// the seed root, then rebuilds (f_3, π_1, π_2).
PartitionedHypermap thetaInverse(const PermutedForest& forest);

}  // namespace hyperoct
