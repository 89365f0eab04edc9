#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperoct/bigint.hpp"

namespace hyperoct {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Ordering is the canonical reverse-lexicographic order used by every table
/// in the library, so (3) < (2,1) < (1,1,1). Maps keyed on Partition
/// therefore iterate in the same order as enumeratePartitions().
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// strictly positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts the parts first; zero parts are dropped.
  static Partition fromUnsorted(std::vector<int> parts);
  /// Parses "4,3,2,2,1". Throws std::invalid_argument on malformed text.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return sum_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int index) const { return parts_[index]; }
  bool empty() const { return parts_.empty(); }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  std::string toString() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return b.parts_ <=> a.parts_;
  }

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

std::ostream& operator<<(std::ostream& out, const Partition& partition);

using PartitionPair = std::pair<Partition, Partition>;

/// n_i(λ) for every part size i present in λ. Absent keys mean zero.
std::map<int, int> multiplicities(const Partition& partition);

/// Aut(λ) = ∏ n_i(λ)!
BigInt automorphismFactor(const Partition& partition);

/// z_λ = Aut(λ) ∏ i^{n_i(λ)}
BigInt zFactor(const Partition& partition);

/// (λ1, λ1, λ2, λ2, ...)
Partition doubled(const Partition& partition);
/// (2λ1, 2λ2, ...)
Partition scaled2(const Partition& partition);
/// Inverse of doubled(); empty when some part size has odd multiplicity.
std::optional<Partition> halveDoubled(const Partition& partition);

/// All partitions of n in canonical (reverse-lexicographic) order.
std::vector<Partition> enumeratePartitions(int n);

/// Number of unordered set partitions of the index set {1..ℓ(λ)} whose block
/// sums, sorted, equal μ. Zero when λ does not refine μ.
BigInt refinementCount(const Partition& lambda, const Partition& mu);

/// Product of the hook lengths of the Young diagram.
BigInt hookProduct(const Partition& partition);

/// |K_ν| = |B_n| |C_ν| 2^{n-ℓ(ν)}, the size of the double coset of the
/// hyperoctahedral group indexed by ν.
BigInt doubleCosetSize(const Partition& nu);

/// |B_n| = 2^n n!
BigInt hyperoctahedralOrder(int n);

}  // namespace hyperoct
