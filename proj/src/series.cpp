#include "hyperoct/series.hpp"

namespace hyperoct {

std::string toString(Basis basis) {
  return basis == Basis::power ? "p" : "m";
}

Rational SymSeries::coefficient(const Partition& lambda,
                                const Partition& mu) const {
  auto it = coefficients_.find({lambda, mu});
  return it == coefficients_.end() ? Rational(0) : it->second;
}

void SymSeries::add(const Partition& lambda, const Partition& mu,
                    const Rational& value) {
  if (lambda.size() != n_ || mu.size() != n_) {
    throw std::invalid_argument("series key " + lambda.toString() + "," +
                                mu.toString() + " is not of degree " +
                                std::to_string(n_));
  }
  if (value == 0) return;
  Rational& slot = coefficients_[{lambda, mu}];
  slot += value;
  if (slot == 0) coefficients_.erase({lambda, mu});
}

SymSeries seriesFromTable(int n, Basis basis, const CountTable& table) {
  SymSeries series(n, basis);
  for (const auto& [key, count] : table) {
    series.add(key.first, key.second, Rational(count));
  }
  return series;
}

SymSeries lhsSeriesFromL(int n) {
  return seriesFromTable(n, Basis::power, countL(n));
}

SymSeries convertPPtoMM(const SymSeries& series) {
  if (series.basis() != Basis::power) {
    throw BasisMismatch("convertPPtoMM expects a power-sum series");
  }
  const int n = series.n();
  const auto partitions = enumeratePartitions(n);
  // ρ_{λ}(μ) = Aut(μ) R̄_{λ,μ}
  std::map<PartitionPair, BigInt> weight;
  for (const auto& lambda : partitions) {
    for (const auto& mu : partitions) {
      BigInt w = automorphismFactor(mu) * refinementCount(lambda, mu);
      if (w != 0) weight[{lambda, mu}] = w;
    }
  }
  SymSeries out(n, Basis::monomial);
  for (const auto& [key, value] : series.coefficients()) {
    for (const auto& nu : partitions) {
      auto left = weight.find({key.first, nu});
      if (left == weight.end()) continue;
      for (const auto& rho : partitions) {
        auto right = weight.find({key.second, rho});
        if (right == weight.end()) continue;
        out.add(nu, rho, value * Rational(left->second * right->second));
      }
    }
  }
  return out;
}

SymSeries convertMMtoPP(const SymSeries& series) {
  if (series.basis() != Basis::monomial) {
    throw BasisMismatch("convertMMtoPP expects a monomial series");
  }
  const int n = series.n();
  const auto partitions = enumeratePartitions(n);
  const int size = int(partitions.size());
  // T[λ][μ] = Aut(μ) R̄_{λ,μ}; S = T⁻¹ by Gauss-Jordan elimination.
  std::vector<std::vector<Rational>> t(size, std::vector<Rational>(size)),
      s(size, std::vector<Rational>(size));
  for (int a = 0; a < size; ++a) {
    s[a][a] = 1;
    for (int b = 0; b < size; ++b) {
      t[a][b] = Rational(automorphismFactor(partitions[b]) *
                         refinementCount(partitions[a], partitions[b]));
    }
  }
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (t[pivot][col] == 0) ++pivot;
    std::swap(t[pivot], t[col]);
    std::swap(s[pivot], s[col]);
    const Rational scale = t[col][col];
    for (int c = 0; c < size; ++c) {
      t[col][c] /= scale;
      s[col][c] /= scale;
    }
    for (int row = 0; row < size; ++row) {
      if (row == col || t[row][col] == 0) continue;
      const Rational factor = t[row][col];
      for (int c = 0; c < size; ++c) {
        t[row][c] -= factor * t[col][c];
        s[row][c] -= factor * s[col][c];
      }
    }
  }
  std::map<Partition, int> indexOf;
  for (int a = 0; a < size; ++a) indexOf[partitions[a]] = a;
  // C = Tᵀ L T, so L = Sᵀ C S.
  SymSeries out(n, Basis::power);
  for (const auto& [key, value] : series.coefficients()) {
    const int nu = indexOf.at(key.first), rho = indexOf.at(key.second);
    for (int lambda = 0; lambda < size; ++lambda) {
      if (s[nu][lambda] == 0) continue;
      for (int mu = 0; mu < size; ++mu) {
        if (s[rho][mu] == 0) continue;
        out.add(partitions[lambda], partitions[mu],
                s[nu][lambda] * value * s[rho][mu]);
      }
    }
  }
  return out;
}

CountTable lpFromL(int n, const CountTable& lTable) {
  const auto partitions = enumeratePartitions(n);
  CountTable out;
  for (const auto& [key, count] : lTable) {
    for (const auto& nu : partitions) {
      BigInt left = refinementCount(key.first, nu);
      if (left == 0) continue;
      for (const auto& rho : partitions) {
        BigInt right = refinementCount(key.second, rho);
        if (right == 0) continue;
        out[{nu, rho}] += left * right * count;
      }
    }
  }
  return out;
}

CountTable lpFromL(int n) { return lpFromL(n, countL(n)); }

SeriesComparison compareSeries(const SymSeries& a, const SymSeries& b) {
  if (a.basis() != b.basis() || a.n() != b.n()) {
    throw BasisMismatch("cannot compare " + toString(a.basis()) + "-series of degree " +
                        std::to_string(a.n()) + " with " + toString(b.basis()) +
                        "-series of degree " + std::to_string(b.n()));
  }
  std::map<PartitionPair, int> keys;
  for (const auto& [key, value] : a.coefficients()) keys[key];
  for (const auto& [key, value] : b.coefficients()) keys[key];
  SeriesComparison result;
  for (const auto& [key, unused] : keys) {
    Rational left = a.coefficient(key.first, key.second);
    Rational right = b.coefficient(key.first, key.second);
    if (left != right) {
      result.equal = false;
      result.firstDifference = key;
      result.left = left;
      result.right = right;
      break;
    }
  }
  return result;
}

}  // namespace hyperoct
