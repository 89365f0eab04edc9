#include "hyperoct/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "hyperoct/parallel.hpp"
#include "hyperoct/permutation.hpp"

namespace hyperoct {

namespace {

// Beta-numbers of `shape` with `length` entries, decreasing.
std::vector<int> betaNumbers(const std::vector<int>& shape, int length) {
  std::vector<int> beta(length);
  for (int i = 0; i < length; ++i) {
    int part = i < int(shape.size()) ? shape[i] : 0;
    beta[i] = part + length - 1 - i;
  }
  return beta;
}

long characterOnBeta(std::vector<int> beta, const std::vector<int>& type,
                     std::size_t next) {
  if (next == type.size()) return 1;
  const int k = type[next];
  long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i], to = from - k;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) {
      continue;
    }
    int height = 0;
    for (int b : beta) height += (b > to && b < from) ? 1 : 0;
    std::vector<int> removed = beta;
    removed[i] = to;
    std::sort(removed.rbegin(), removed.rend());
    long value = characterOnBeta(std::move(removed), type, next + 1);
    total += height % 2 == 0 ? value : -value;
  }
  return total;
}

}  // namespace

BigInt mnCharacter(const Partition& shape, const Partition& type) {
  if (shape.size() != type.size()) {
    throw SizeMismatch("character shape and class type differ in size");
  }
  return characterOnBeta(betaNumbers(shape.parts(), shape.length()),
                         type.parts(), 0);
}

const CountTable& phiTable(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CountTable>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return *it->second;

  // Bucket S_{2n} by (double coset, cycle type).
  std::map<PartitionPair, long> buckets;
  forEachPermutation(n, [&](const Permutation& w) {
    ++buckets[{doubleCosetOf(w), cycleType(w)}];
  });
  const auto partitions = enumeratePartitions(n);
  std::map<PartitionPair, BigInt> characters;
  auto table = std::make_unique<CountTable>();
  for (const auto& beta : partitions) {
    const Partition shape = scaled2(beta);
    for (const auto& mu : partitions) (*table)[{beta, mu}] = 0;
    for (const auto& [key, count] : buckets) {
      auto [it, inserted] = characters.try_emplace({beta, key.second});
      if (inserted) it->second = mnCharacter(shape, key.second);
      (*table)[{beta, key.first}] += it->second * count;
    }
  }
  return *cache.emplace(n, std::move(table)).first->second;
}

BigInt zonalCharacter(const Partition& beta, const Partition& mu) {
  if (beta.size() != mu.size()) {
    throw SizeMismatch("β and μ must partition the same n");
  }
  return phiTable(beta.size()).at({beta, mu});
}

std::string toString(HookReading reading) {
  return reading == HookReading::perBeta ? "H_{2beta}" : "H_{2nu}";
}

Rational heckeB(const Partition& nu, const Partition& lambda,
                const Partition& mu, HookReading reading) {
  const int n = nu.size();
  if (lambda.size() != n || mu.size() != n) {
    throw SizeMismatch("ν, λ, μ must partition the same n");
  }
  const CountTable& phi = phiTable(n);
  const BigInt nuHook = hookProduct(scaled2(nu));
  Rational total = 0;
  for (const auto& beta : enumeratePartitions(n)) {
    const BigInt hook =
        reading == HookReading::perBeta ? hookProduct(scaled2(beta)) : nuHook;
    total += Rational(phi.at({beta, nu}) * phi.at({beta, lambda}) *
                      phi.at({beta, mu})) /
             Rational(hook);
  }
  total /= Rational(doubleCosetSize(nu));
  total.canonicalize();
  return total;
}

}  // namespace hyperoct
