#pragma once

#include <map>
#include <string>

#include "hyperoct/bigint.hpp"
#include "hyperoct/hypermap.hpp"
#include "hyperoct/partition.hpp"

namespace hyperoct {

/// χ^shape evaluated on the class of cycle type `type` (Murnaghan–Nakayama).
/// Throws SizeMismatch if the sizes differ.
BigInt mnCharacter(const Partition& shape, const Partition& type);

/// φ^β(μ) = Σ_{w ∈ K_μ} χ^{2β}(w) for all β, μ ⊢ n, keyed (β, μ). Computed
/// by one scan of S_{2n} and cached per n.
const CountTable& phiTable(int n);
BigInt zonalCharacter(const Partition& beta, const Partition& mu);

/// Which hook product normalizes the Hecke-algebra expansion of b.
///   perBeta: H_{2β} inside the sum over β
///   perNu:   H_{2ν} for the fixed ν
enum class HookReading { perBeta, perNu };
std::string toString(HookReading reading);

/// b^ν_{λ,μ} = (1/|K_ν|) Σ_β φ^β(ν) φ^β(λ) φ^β(μ) / H.
Rational heckeB(const Partition& nu, const Partition& lambda,
                const Partition& mu,
                HookReading reading = HookReading::perBeta);

}  // namespace hyperoct
