#include "hyperoct/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperoct {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::fromUnsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        end != token.data() + token.size()) {
      throw std::invalid_argument("malformed partition '" + std::string(text) +
                                  "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::toString() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const Partition& partition) {
  return out << '(' << partition.toString() << ')';
}

std::map<int, int> multiplicities(const Partition& partition) {
  std::map<int, int> counts;
  for (int part : partition) ++counts[part];
  return counts;
}

BigInt automorphismFactor(const Partition& partition) {
  BigInt result = 1;
  for (auto [part, count] : multiplicities(partition)) {
    result *= factorial(count);
  }
  return result;
}

BigInt zFactor(const Partition& partition) {
  BigInt result = automorphismFactor(partition);
  for (int part : partition) result *= part;
  return result;
}

Partition doubled(const Partition& partition) {
  std::vector<int> parts;
  parts.reserve(2 * partition.parts().size());
  for (int part : partition) {
    parts.push_back(part);
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Partition scaled2(const Partition& partition) {
  std::vector<int> parts(partition.begin(), partition.end());
  for (int& part : parts) part *= 2;
  return Partition(std::move(parts));
}

std::optional<Partition> halveDoubled(const Partition& partition) {
  std::vector<int> parts;
  const auto& source = partition.parts();
  for (std::size_t i = 0; i < source.size(); i += 2) {
    if (i + 1 >= source.size() || source[i] != source[i + 1]) {
      return std::nullopt;
    }
    parts.push_back(source[i]);
  }
  return Partition(std::move(parts));
}

namespace {

void appendPartitions(int remaining, int maxPart, std::vector<int>& prefix,
                      std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, maxPart); part >= 1; --part) {
    prefix.push_back(part);
    appendPartitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Counts maps from λ-indices to μ-positions with block sums μ_j; every
// unordered set partition is hit Aut(μ) times.
BigInt countLabelledRefinements(const std::vector<int>& lambda,
                                std::size_t index, std::vector<int>& capacity,
                                std::map<std::pair<std::size_t, std::vector<int>>,
                                         BigInt>& memo) {
  if (index == lambda.size()) {
    return std::all_of(capacity.begin(), capacity.end(),
                       [](int c) { return c == 0; })
               ? BigInt(1)
               : BigInt(0);
  }
  auto key = std::make_pair(index, capacity);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  for (int& slot : capacity) {
    if (slot >= lambda[index]) {
      slot -= lambda[index];
      total += countLabelledRefinements(lambda, index + 1, capacity, memo);
      slot += lambda[index];
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::vector<Partition> enumeratePartitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
  std::vector<Partition> out;
  std::vector<int> prefix;
  appendPartitions(n, n, prefix, out);
  return out;
}

BigInt refinementCount(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  std::vector<int> capacity(mu.begin(), mu.end());
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;
  BigInt labelled =
      countLabelledRefinements(lambda.parts(), 0, capacity, memo);
  return labelled / automorphismFactor(mu);
}

BigInt hookProduct(const Partition& partition) {
  if (partition.empty()) return 1;
  std::vector<int> conjugate(partition[0], 0);
  for (int part : partition) {
    for (int column = 0; column < part; ++column) ++conjugate[column];
  }
  BigInt product = 1;
  for (int row = 0; row < partition.length(); ++row) {
    for (int column = 0; column < partition[row]; ++column) {
      int arm = partition[row] - column - 1;
      int leg = conjugate[column] - row - 1;
      product *= arm + leg + 1;
    }
  }
  return product;
}

BigInt hyperoctahedralOrder(int n) {
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return power * factorial(n);
}

BigInt doubleCosetSize(const Partition& nu) {
  const int n = nu.size();
  BigInt classSize = factorial(n) / zFactor(nu);
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2,
                static_cast<unsigned long>(n - nu.length()));
  return hyperoctahedralOrder(n) * classSize * power;
}

}  // namespace hyperoct
