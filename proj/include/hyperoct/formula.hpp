#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hyperoct/degree_array.hpp"
#include "hyperoct/hypermap.hpp"
#include "hyperoct/partition.hpp"

namespace hyperoct {

class SymSeries;

/// Degree arrays A = (P, P', Q, Q') in M(λ, μ), in a deterministic order.
///
/// Besides the linear constraints tying A to λ and μ, an entry is listed only
/// if its multinomial factor can be nonzero (2(j+k) ≤ i-1 for unprimed
/// black entries, 2(j+k) ≤ i for unprimed white entries, 1 ≤ j+k and
/// 2(j+k) ≤ i for primed entries), at most one white entry has i = 2(j+k)
/// with multiplicity one, and the thorn count n+1-p-q-2r is nonnegative.
std::vector<DegreeArray> enumerateM(const Partition& lambda,
                                    const Partition& mu);

/// m! / (a! b! c! (m-a-b-c)!), or 0 when any argument is negative or
/// a + b + c > m.
BigInt boundedMultinomial(long m, long a, long b, long c);

/// Which branch of the closed form evaluated a summand.
enum class SummandRegime {
  generic,          // N(A) as displayed; q' = 0 or no degenerate white entry
  degenerateEntry,  // q' ≠ 0 and one white entry with i = 2(j+k)
  singleWhite,      // q' ≠ 0 and n - q - 2r = 0 (then p = 1)
  poleCancelled,    // q = 0, n + 1 - p - 2r = 0: (n-p-2r)! = (-1)! cancels
  vanishing,        // a multinomial factor is zero
};
std::string toString(SummandRegime regime);

/// N(A) in the generic regime. Throws std::domain_error when A has a white
/// entry with i = 2(j+k) and q' ≠ 0, or when n - q - 2r = 0 and q' ≠ 0; those
/// configurations are only meaningful inside closedFormSummand().
Rational nFactor(const DegreeArray& a, int n);

struct Summand {
  Rational value;
  SummandRegime regime = SummandRegime::generic;
};

/// Per-A term of the closed form; equals the number F(A) of permuted forests
/// of degree A. Throws std::out_of_range if a factorial argument goes negative
/// outside the handled regimes (A is not in M).
Summand closedFormSummand(const DegreeArray& a, int n);

/// Coefficient table of m_λ(x) m_μ(y): Aut(λ)Aut(μ) Σ_{A∈M(λ,μ)} summand.
/// Throws std::logic_error (NonIntegralTotal) if a coefficient is not an
/// integer.
SymSeries rhsSeries(int n);

/// n (n-ℓ(λ))! (n-ℓ(μ))! / (n+1-ℓ(λ)-ℓ(μ))! as an m⊗m table.
SymSeries orientableSeries(int n);

/// c^n_{λ,μ}: factorizations w_1 w_2 = (1 2 ... n) in S_n with w_1 ∈ C_λ and
/// w_2 ∈ C_μ, as a p⊗p table.
SymSeries bruteForceC(int n);

}  // namespace hyperoct
