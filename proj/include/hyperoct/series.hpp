#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "hyperoct/bigint.hpp"
#include "hyperoct/hypermap.hpp"
#include "hyperoct/partition.hpp"

namespace hyperoct {

enum class Basis { power, monomial };
std::string toString(Basis basis);

class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bihomogeneous symmetric series of degree (n, n), stored as coefficients
/// of p_λ(x)p_μ(y) or m_λ(x)m_μ(y). Zero coefficients may be omitted.
class SymSeries {
 public:
  SymSeries(int n, Basis basis) : n_(n), basis_(basis) {}

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  const std::map<PartitionPair, Rational>& coefficients() const {
    return coefficients_;
  }
  Rational coefficient(const Partition& lambda, const Partition& mu) const;
  /// Adds `value` to the coefficient. Throws std::invalid_argument if either
  /// key is not a partition of n.
  void add(const Partition& lambda, const Partition& mu, const Rational& value);

 private:
  int n_;
  Basis basis_;
  std::map<PartitionPair, Rational> coefficients_;
};

/// Ψ^(n) = Σ L^n_{λ,μ} p_λ p_μ.
SymSeries lhsSeriesFromL(int n);
SymSeries seriesFromTable(int n, Basis basis, const CountTable& table);

/// p_λ = Σ_μ Aut(μ) R̄_{λ,μ} m_μ applied in both variable sets.
SymSeries convertPPtoMM(const SymSeries& series);
/// Inverse of convertPPtoMM(), by exact inversion of the triangular change of
/// basis.
SymSeries convertMMtoPP(const SymSeries& series);

/// LP^n_{ν,ρ} = Σ R̄_{λν} R̄_{μρ} L^n_{λ,μ}.
CountTable lpFromL(int n);
CountTable lpFromL(int n, const CountTable& lTable);

struct SeriesComparison {
  bool equal = true;
  std::optional<PartitionPair> firstDifference;
  Rational left;
  Rational right;
};

/// Exact comparison; reports the first differing key in canonical order.
/// Throws BasisMismatch if bases or degrees differ.
SeriesComparison compareSeries(const SymSeries& a, const SymSeries& b);

}  // namespace hyperoct
