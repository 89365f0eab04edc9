#include "hyperoct/hypermap.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hyperoct/parallel.hpp"

namespace hyperoct {

namespace {

// Halved cycle type of a∘b on raw index images, without building Permutations.
Partition halvedProductType(const std::vector<int>& a,
                            const std::vector<int>& b,
                            std::vector<char>& seen,
                            std::vector<int>& lengths) {
  std::fill(seen.begin(), seen.end(), 0);
  lengths.clear();
  for (std::size_t start = 0; start < a.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (int x = int(start); !seen[x]; x = a[b[x]]) {
      seen[x] = 1;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  std::vector<int> halved;
  halved.reserve(lengths.size() / 2);
  for (std::size_t i = 0; i < lengths.size(); i += 2) {
    if (i + 1 >= lengths.size() || lengths[i] != lengths[i + 1]) {
      throw NotDoubled("product of two pairings must have doubled type");
    }
    halved.push_back(lengths[i]);
  }
  return Partition(std::move(halved));
}

Point maxPoint(const std::vector<Point>& block, bool hat) {
  Point best;
  for (Point x : block) {
    if (x.isHat() == hat && (best.value() == 0 || x.label() > best.label())) {
      best = x;
    }
  }
  return best;
}

template <class Visit>
void forEachSetPartitionOf(int itemCount, Visit visit) {
  // Restricted growth strings: block[i] <= 1 + max(block[0..i-1]).
  std::vector<int> block(itemCount, 0);
  std::function<void(int, int)> extend = [&](int index, int blocks) {
    if (index == itemCount) {
      visit(block, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[index] = b;
      extend(index + 1, std::max(blocks, b + 1));
    }
  };
  if (itemCount == 0) {
    visit(block, 0);
    return;
  }
  extend(0, 0);
}

}  // namespace

PartitionPair vertexDistributions(const Pairing& edges) {
  const int n = edges.n();
  return {halvedCycleType(compose(edges, canonicalF1(n))),
          halvedCycleType(compose(edges, canonicalFStar(n)))};
}

CountTable countL(int n) {
  const Pairing f1 = canonicalF1(n);
  const Pairing f2 = canonicalFStar(n);
  const int slices = 2 * n - 1;
  std::vector<CountTable> partial(slices);
  parallelFor(slices, [&](int slice) {
    std::vector<char> seen(2 * n);
    std::vector<int> lengths;
    std::map<PartitionPair, long> local;
    forEachPairingWithFirstPartner(n, slice + 1, [&](const Pairing& f3) {
      const auto& image = f3.permutation().image();
      Partition lambda = halvedProductType(
          image, f1.permutation().image(), seen, lengths);
      Partition mu = halvedProductType(image, f2.permutation().image(), seen,
                                       lengths);
      ++local[{std::move(lambda), std::move(mu)}];
    });
    for (auto& [key, count] : local) partial[slice][key] += count;
  });
  CountTable table;
  for (const auto& slice : partial) {
    for (const auto& [key, count] : slice) table[key] += count;
  }
  return table;
}

bool isOrientable(const Pairing& edges) {
  for (auto [a, b] : edges.pairs()) {
    if (a.isHat() == b.isHat()) return false;
  }
  return true;
}

std::vector<std::vector<Point>> stableOrbits(const Pairing& edges, Side side) {
  const int n = edges.n();
  const Pairing other = side == Side::white ? canonicalF1(n) : canonicalFStar(n);
  std::vector<std::vector<Point>> orbits;
  std::vector<char> seen(2 * n, 0);
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    std::vector<int> stack{start};
    std::vector<Point> orbit;
    seen[start] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      orbit.push_back(Point::fromIndex(x));
      for (int y : {edges.partnerIndex(x), other.partnerIndex(x)}) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

SetPartition::SetPartition(int n, std::vector<std::vector<Point>> blocks)
    : n_(n), blocks_(std::move(blocks)), owner_(2 * n, -1) {
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    int hats = 0;
    for (Point x : blocks_[b]) {
      if (x.label() < 1 || x.label() > n) {
        throw std::invalid_argument("block point outside [n] ∪ [n̂]");
      }
      if (owner_[x.index()] != -1) {
        throw std::invalid_argument("point appears in two blocks");
      }
      owner_[x.index()] = int(b);
      hats += x.isHat() ? 1 : 0;
    }
    if (2 * hats != int(blocks_[b].size())) {
      throw std::invalid_argument(
          "block must contain as many hat as non-hat points");
    }
  }
  if (std::find(owner_.begin(), owner_.end(), -1) != owner_.end()) {
    throw std::invalid_argument("blocks do not cover every point");
  }
}

Partition SetPartition::halfType() const {
  std::vector<int> sizes;
  for (const auto& block : blocks_) sizes.push_back(int(block.size()) / 2);
  return Partition::fromUnsorted(std::move(sizes));
}

bool isStable(const SetPartition& partition, const Pairing& edges, Side side) {
  const int n = edges.n();
  const Pairing other = side == Side::white ? canonicalF1(n) : canonicalFStar(n);
  for (int x = 0; x < 2 * n; ++x) {
    Point p = Point::fromIndex(x);
    if (partition.blockOf(edges.partner(p)) != partition.blockOf(p) ||
        partition.blockOf(other.partner(p)) != partition.blockOf(p)) {
      return false;
    }
  }
  return true;
}

void PartitionedHypermap::validate() const {
  if (whiteBlocks.n() != n() || blackBlocks.n() != n()) {
    throw std::invalid_argument("set partitions and pairing differ in n");
  }
  if (!isStable(whiteBlocks, edges, Side::white)) {
    throw std::invalid_argument("white blocks are not stable by f_1 and f_3");
  }
  if (!isStable(blackBlocks, edges, Side::black)) {
    throw std::invalid_argument("black blocks are not stable by f_2 and f_3");
  }
}

std::vector<SetPartition> stablePartitions(const Pairing& edges, Side side) {
  const auto orbits = stableOrbits(edges, side);
  std::vector<SetPartition> out;
  forEachSetPartitionOf(int(orbits.size()),
                        [&](const std::vector<int>& block, int blockCount) {
                          std::vector<std::vector<Point>> blocks(blockCount);
                          for (std::size_t o = 0; o < orbits.size(); ++o) {
                            auto& target = blocks[block[o]];
                            target.insert(target.end(), orbits[o].begin(),
                                          orbits[o].end());
                          }
                          out.emplace_back(edges.n(), std::move(blocks));
                        });
  return out;
}

void forEachPartitionedHypermap(
    int n, const std::function<void(const PartitionedHypermap&)>& visit) {
  forEachPairing(n, [&](const Pairing& f3) {
    const auto whites = stablePartitions(f3, Side::white);
    const auto blacks = stablePartitions(f3, Side::black);
    for (const auto& white : whites) {
      for (const auto& black : blacks) visit({f3, white, black});
    }
  });
}

std::vector<PartitionedHypermap> enumeratePartitionedHypermaps(int n) {
  std::vector<PartitionedHypermap> out;
  forEachPartitionedHypermap(
      n, [&](const PartitionedHypermap& map) { out.push_back(map); });
  return out;
}

LpCensus partitionedHypermapCensus(int n) {
  const int slices = 2 * n - 1;
  std::vector<LpCensus> partial(slices);
  parallelFor(slices, [&](int slice) {
    LpCensus& local = partial[slice];
    forEachPairingWithFirstPartner(n, slice + 1, [&](const Pairing& f3) {
      const auto whites = stablePartitions(f3, Side::white);
      const auto blacks = stablePartitions(f3, Side::black);
      for (const auto& white : whites) {
        for (const auto& black : blacks) {
          PartitionedHypermap map{f3, white, black};
          ++local.total;
          local.byType[{white.halfType(), black.halfType()}] += 1;
          local.byDegree[degreeStatistics(map)] += 1;
        }
      }
    });
  });
  LpCensus census;
  for (const auto& part : partial) {
    census.total += part.total;
    for (const auto& [key, count] : part.byType) census.byType[key] += count;
    for (const auto& [key, count] : part.byDegree) census.byDegree[key] += count;
  }
  return census;
}

DegreeArray degreeStatistics(const PartitionedHypermap& map) {
  const auto& edges = map.edges;
  const auto& whites = map.whiteBlocks.blocks();
  const auto& blacks = map.blackBlocks.blocks();
  const Point one = Point::plain(1);

  // Hat points t that are the maximum hat of a black block with f_3(t) hat:
  // the sources of arrows into white vertices.
  std::vector<Point> hatArrowSources;
  for (const auto& block : blacks) {
    Point t = maxPoint(block, true);
    if (edges.partner(t).isHat()) hatArrowSources.push_back(t);
  }
  // Non-hat t maximal in a white block without 1 with f_3(t) non-hat.
  std::vector<Point> plainArrowSources;
  for (const auto& block : whites) {
    if (std::binary_search(block.begin(), block.end(), one)) continue;
    Point t = maxPoint(block, false);
    if (!edges.partner(t).isHat()) plainArrowSources.push_back(t);
  }

  DegreeArray result;
  for (std::size_t b = 0; b < whites.size(); ++b) {
    const auto& block = whites[b];
    const int half = int(block.size()) / 2;
    Point top = maxPoint(block, false);
    bool hasOne = std::binary_search(block.begin(), block.end(), one);
    bool root = !hasOne && !edges.partner(top).isHat();
    int arrows = 0;
    for (Point t : hatArrowSources) {
      if (map.whiteBlocks.blockOf(t) == int(b)) ++arrows;
    }
    int plainPairs = 0;
    for (Point x : block) {
      if (!x.isHat() && !edges.partner(x).isHat()) ++plainPairs;
    }
    DegreeArray::add(root ? result.whiteRoots : result.white,
                     {half, arrows, plainPairs / 2 - arrows});
  }
  for (std::size_t b = 0; b < blacks.size(); ++b) {
    const auto& block = blacks[b];
    const int half = int(block.size()) / 2;
    Point top = maxPoint(block, true);
    bool root = edges.partner(top).isHat();
    int arrows = 0;
    for (Point t : plainArrowSources) {
      if (map.blackBlocks.blockOf(t) == int(b)) ++arrows;
    }
    int hatPairs = 0;
    for (Point x : block) {
      if (x.isHat() && edges.partner(x).isHat()) ++hatPairs;
    }
    DegreeArray::add(root ? result.blackRoots : result.black,
                     {half, arrows, hatPairs / 2 - arrows});
  }
  return result;
}

Permutation cosetRepresentative(const Partition& nu) {
  const int n = nu.size();
  // w_(n) lies in K_(n) only for odd n: f_⋆∘f_w = w_(n)², which splits for
  // even n.
  if (nu == Partition({n}) && doubleCosetOf(longTarget(n)) == nu) {
    return longTarget(n);
  }
  std::vector<int> image(2 * n);
  std::iota(image.begin(), image.end(), 0);
  do {
    Permutation w(image);
    if (doubleCosetOf(w) == nu) return w;
  } while (std::next_permutation(image.begin(), image.end()));
  throw std::logic_error("double coset " + nu.toString() + " is empty");
}

CountTable bruteForceBTable(const Partition& nu) {
  const int n = nu.size();
  const Permutation target = cosetRepresentative(nu);
  // Cosets of every permutation, indexed by lexicographic rank, computed once.
  std::vector<Permutation> all;
  forEachPermutation(n, [&](const Permutation& w) { all.push_back(w); });
  const auto partitions = enumeratePartitions(n);
  std::map<Partition, int> partitionIndex;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    partitionIndex[partitions[i]] = int(i);
  }
  const int count = int(all.size());
  const int chunks = std::min(count, 64);
  std::vector<std::vector<long>> partial(
      chunks, std::vector<long>(partitions.size() * partitions.size(), 0));
  parallelFor(chunks, [&](int chunk) {
    for (int i = chunk; i < count; i += chunks) {
      const Permutation& u1 = all[i];
      // u2 = u1⁻¹ w_ν so that u1 · u2 = w_ν.
      Permutation u2 = compose(u1.inverse(), target);
      int a = partitionIndex.at(doubleCosetOf(u1));
      int b = partitionIndex.at(doubleCosetOf(u2));
      ++partial[chunk][a * partitions.size() + b];
    }
  });
  CountTable table;
  for (std::size_t a = 0; a < partitions.size(); ++a) {
    for (std::size_t b = 0; b < partitions.size(); ++b) {
      long total = 0;
      for (const auto& part : partial) total += part[a * partitions.size() + b];
      table[{partitions[a], partitions[b]}] = total;
    }
  }
  return table;
}

BigInt bruteForceB(const Partition& nu, const Partition& lambda,
                   const Partition& mu) {
  if (lambda.size() != nu.size() || mu.size() != nu.size()) {
    throw SizeMismatch("ν, λ, μ must partition the same n");
  }
  return bruteForceBTable(nu).at({lambda, mu});
}

}  // namespace hyperoct
