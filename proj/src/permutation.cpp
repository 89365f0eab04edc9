#include "hyperoct/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace hyperoct {

namespace {

int indexOfSigned(int n, int value) {
  if (value == 0 || value > n || value < -n) {
    throw std::invalid_argument("point " + std::to_string(value) +
                                " outside [n] ∪ [n̂] for n=" + std::to_string(n));
  }
  return Point(value).index();
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (image_.size() % 2 != 0) {
    throw std::invalid_argument("permutation must act on an even point set");
  }
  std::vector<char> seen(image_.size(), 0);
  for (int target : image_) {
    if (target < 0 || target >= static_cast<int>(image_.size()) ||
        seen[target]) {
      throw std::invalid_argument("image is not a bijection");
    }
    seen[target] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(2 * n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::fromCycles(
    int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(2 * n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<char> used(2 * n, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = indexOfSigned(n, cycle[i]);
      int to = indexOfSigned(n, cycle[(i + 1) % cycle.size()]);
      if (used[from]) {
        throw std::invalid_argument("point appears in two cycles");
      }
      used[from] = 1;
      image[from] = to;
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) inv[image_[x]] = int(x);
  return Permutation(std::move(inv));
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (int x = int(start); !seen[x]; x = image_[x]) {
      seen[x] = 1;
      cycle.push_back(Point::fromIndex(x));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.pointCount() != tau.pointCount()) {
    throw SizeMismatch("cannot compose permutations of different sizes");
  }
  std::vector<int> image(tau.pointCount());
  for (int x = 0; x < tau.pointCount(); ++x) {
    image[x] = sigma.imageIndex(tau.imageIndex(x));
  }
  return Permutation(std::move(image));
}

Pairing::Pairing(Permutation permutation)
    : permutation_(std::move(permutation)) {
  for (int x = 0; x < permutation_.pointCount(); ++x) {
    int y = permutation_.imageIndex(x);
    if (y == x || permutation_.imageIndex(y) != x) {
      throw std::invalid_argument(
          "pairing must be a fixed-point-free involution");
    }
  }
}

Pairing Pairing::fromPairs(int n,
                           const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<int>> cycles;
  cycles.reserve(pairs.size());
  for (auto [a, b] : pairs) cycles.push_back({a, b});
  return Pairing(Permutation::fromCycles(n, cycles));
}

std::vector<std::pair<Point, Point>> Pairing::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (int x = 0; x < permutation_.pointCount(); ++x) {
    int y = permutation_.imageIndex(x);
    if (x < y) out.emplace_back(Point::fromIndex(x), Point::fromIndex(y));
  }
  return out;
}

Partition cycleType(const Permutation& sigma) {
  std::vector<int> lengths;
  for (const auto& cycle : sigma.cycles()) {
    lengths.push_back(static_cast<int>(cycle.size()));
  }
  return Partition::fromUnsorted(std::move(lengths));
}

Partition halvedCycleType(const Permutation& sigma) {
  Partition type = cycleType(sigma);
  auto halved = halveDoubled(type);
  if (!halved) {
    throw NotDoubled("cycle type " + type.toString() + " is not of form λλ");
  }
  return *halved;
}

Pairing canonicalF1(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) pairs.emplace_back(i, i == 1 ? -n : -(i - 1));
  return Pairing::fromPairs(n, pairs);
}

Pairing canonicalFStar(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) pairs.emplace_back(i, -i);
  return Pairing::fromPairs(n, pairs);
}

Permutation longTarget(int n) {
  return compose(canonicalF1(n), canonicalFStar(n));
}

namespace {

void extendPairing(std::vector<int>& image, std::vector<char>& paired,
                   const std::function<void(const Pairing&)>& visit) {
  int first = -1;
  for (std::size_t x = 0; x < paired.size(); ++x) {
    if (!paired[x]) {
      first = int(x);
      break;
    }
  }
  if (first < 0) {
    visit(Pairing(Permutation(image)));
    return;
  }
  paired[first] = 1;
  for (std::size_t y = first + 1; y < paired.size(); ++y) {
    if (paired[y]) continue;
    paired[y] = 1;
    image[first] = int(y);
    image[y] = first;
    extendPairing(image, paired, visit);
    paired[y] = 0;
  }
  paired[first] = 0;
}

}  // namespace

void forEachPairing(int n, const std::function<void(const Pairing&)>& visit) {
  if (n < 1) throw std::invalid_argument("pairings need n >= 1");
  std::vector<int> image(2 * n, 0);
  std::vector<char> paired(2 * n, 0);
  extendPairing(image, paired, visit);
}

void forEachPairingWithFirstPartner(
    int n, int partnerOfFirst,
    const std::function<void(const Pairing&)>& visit) {
  if (partnerOfFirst < 1 || partnerOfFirst >= 2 * n) {
    throw std::invalid_argument("partner index out of range");
  }
  std::vector<int> image(2 * n, 0);
  std::vector<char> paired(2 * n, 0);
  image[0] = partnerOfFirst;
  image[partnerOfFirst] = 0;
  paired[0] = paired[partnerOfFirst] = 1;
  extendPairing(image, paired, visit);
}

std::vector<Pairing> enumeratePairings(int n) {
  std::vector<Pairing> out;
  forEachPairing(n, [&](const Pairing& f) { out.push_back(f); });
  return out;
}

void forEachPermutation(int n,
                        const std::function<void(const Permutation&)>& visit) {
  std::vector<int> image(2 * n);
  std::iota(image.begin(), image.end(), 0);
  do {
    visit(Permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
}

Pairing pairingOf(const Permutation& w) {
  const int n = w.n();
  Permutation inv = w.inverse();
  std::vector<int> image(2 * n);
  for (int i = 1; i <= n; ++i) {
    int a = inv.imageIndex(Point::plain(i).index());
    int b = inv.imageIndex(Point::hat(i).index());
    image[a] = b;
    image[b] = a;
  }
  return Pairing(Permutation(std::move(image)));
}

Partition doubleCosetOf(const Permutation& w) {
  return halvedCycleType(compose(canonicalFStar(w.n()), pairingOf(w)));
}

}  // namespace hyperoct
