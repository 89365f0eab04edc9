#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hyperoct/partition.hpp"

namespace hyperoct {

/// A point of the signed ground set [n] ∪ [n̂]. A positive value i is the
/// non-hat number i, a negative value -i is the hat number î.
///
/// Points are stored densely by index(): i ↦ 2(i-1), î ↦ 2(i-1)+1. The
/// induced order 1 < 1̂ < 2 < 2̂ < ... < n < n̂ is the order in which the
/// forest recovery assigns labels.
class Point {
 public:
  constexpr Point() = default;
  constexpr explicit Point(int value) : value_(value) {}

  static constexpr Point plain(int i) { return Point(i); }
  static constexpr Point hat(int i) { return Point(-i); }
  static constexpr Point fromIndex(int index) {
    int label = index / 2 + 1;
    return Point(index % 2 == 0 ? label : -label);
  }

  constexpr int value() const { return value_; }
  constexpr int label() const { return value_ < 0 ? -value_ : value_; }
  constexpr bool isHat() const { return value_ < 0; }
  constexpr int index() const { return 2 * (label() - 1) + (isHat() ? 1 : 0); }

  friend constexpr bool operator==(Point, Point) = default;
  friend constexpr auto operator<=>(Point a, Point b) {
    return a.index() <=> b.index();
  }

 private:
  int value_ = 0;
};

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotDoubled : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A permutation of the 2n points of [n] ∪ [n̂].
class Permutation {
 public:
  Permutation() = default;
  /// `image[x]` is the index of the image of the point with index x.
  /// Throws std::invalid_argument unless it is a bijection of {0..2n-1}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// Cycles are given in signed-point notation; unlisted points are fixed.
  static Permutation fromCycles(int n,
                                const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(image_.size()) / 2; }
  int pointCount() const { return static_cast<int>(image_.size()); }
  Point operator()(Point x) const { return Point::fromIndex(image_[x.index()]); }
  int imageIndex(int index) const { return image_[index]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  /// Cycles starting at their smallest point, listed by smallest point.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// (σ∘τ)(x) = σ(τ(x)): the right argument is applied first.
Permutation compose(const Permutation& sigma, const Permutation& tau);

/// A fixed-point-free involution of [n] ∪ [n̂].
class Pairing {
 public:
  Pairing() = default;
  /// Throws std::invalid_argument unless `permutation` is a fixed-point-free
  /// involution.
  explicit Pairing(Permutation permutation);
  /// Builds the pairing from 2-element cycles in signed notation.
  static Pairing fromPairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int n() const { return permutation_.n(); }
  Point partner(Point x) const { return permutation_(x); }
  int partnerIndex(int index) const { return permutation_.imageIndex(index); }
  const Permutation& permutation() const { return permutation_; }
  operator const Permutation&() const { return permutation_; }
  /// Pairs (a, b) with a < b, sorted by a.
  std::vector<std::pair<Point, Point>> pairs() const;

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  Permutation permutation_;
};

/// Sorted cycle lengths, a partition of 2n.
Partition cycleType(const Permutation& sigma);
/// λ such that cycleType(σ) = λλ. Throws NotDoubled otherwise.
Partition halvedCycleType(const Permutation& sigma);

/// f_1 = (1 n̂)(2 1̂)(3 2̂)...(n n−1̂)
Pairing canonicalF1(int n);
/// f_⋆ = f_2 = (1 1̂)(2 2̂)...(n n̂)
Pairing canonicalFStar(int n);
/// w_(n) = f_1 ∘ f_⋆ = (1 2 ... n)(n̂ ... 2̂ 1̂)
Permutation longTarget(int n);

/// Visits all (2n-1)!! pairings, pairing the smallest unpaired point with
/// each larger point in turn.
void forEachPairing(int n, const std::function<void(const Pairing&)>& visit);
/// The slice of forEachPairing() in which point 1 is paired with the point of
/// index `partnerOfFirst` (1 ≤ partnerOfFirst < 2n). Slices are disjoint and
/// cover the whole stream.
void forEachPairingWithFirstPartner(
    int n, int partnerOfFirst,
    const std::function<void(const Pairing&)>& visit);
std::vector<Pairing> enumeratePairings(int n);

/// Visits every permutation of the 2n points in lexicographic image order.
void forEachPermutation(int n,
                        const std::function<void(const Permutation&)>& visit);

/// f_w = (w⁻¹(1) w⁻¹(1̂)) ... (w⁻¹(n) w⁻¹(n̂))
Pairing pairingOf(const Permutation& w);

/// ν with f_⋆ ∘ f_w of cycle type νν: the double coset B_n w B_n.
Partition doubleCosetOf(const Permutation& w);

}  // namespace hyperoct
