#pragma once

#include <klm/bigint.hpp>
#include <klm/partition.hpp>

namespace klm::oracle {

/// Symmetric-group character value χ^λ(ρ) for a cycle type ρ with
/// |ρ| = |λ|, computed by border-strip removal on beta numbers
/// (Murnaghan-Nakayama). Memoized.
BigInt character(const Partition& lambda, const Partition& rho);

/// z_ρ = Π_j j^{m_j} m_j! where m_j is the number of parts equal to j; the
/// centralizer order, so the class of cycle type ρ has n!/z_ρ elements.
BigInt cycle_symmetrizer(const Partition& rho);

/// Multiplicity of V[λ] in Ind_{S_k × S_{n-k}}^{S_n}(V[μ] ⊠ V[ν]) by
/// explicit character inner products over cycle types of the Young
/// subgroup. This is the brute-force oracle the tableau enumerator is
/// validated against; it never touches the enumerator.
BigInt induced_multiplicity(const Partition& lambda, const Partition& mu,
                            const Partition& nu);

}  // namespace klm::oracle
