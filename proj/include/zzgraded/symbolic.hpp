#pragma once

// Jacobi identities proved as polynomial identities in the index components
// and the family parameters.

#include <functional>

#include "zzgraded/multipoly.hpp"

namespace zzg {

/// Structure constant of [L_{(i,j)}, L_{(k,l)}] = coeff * L_{(i+k, j+l)}
/// as a polynomial in the index components.
using StructureFormula = std::function<MultiPoly(const MultiPoly& i, const MultiPoly& j, const MultiPoly& k,
                                                 const MultiPoly& l)>;

/// Ring with symbols i, j, k, l, m, n, alpha, beta.
RingPtr jacobi_ring();

/// Expanded cyclic Jacobi sum over three symbolic indices (i,j), (k,l), (m,n).
MultiPoly cyclic_jacobi_sum(const StructureFormula& coeff);

/// beta(il - jk) + (k - i) + (l - j) alpha over jacobi_ring().
StructureFormula d_formula(const RingPtr& ring);
/// d_formula with beta = 0.
StructureFormula vir_formula(const RingPtr& ring);
/// (i + alpha)(l - beta) - (j - beta)(k + alpha), away from the punctures.
StructureFormula block_formula(const RingPtr& ring);

bool symbolic_jacobi(const StructureFormula& coeff);
/// Jacobi for the uniform D(alpha, beta) family, all eight symbols free.
bool symbolic_jacobi_d();

}  // namespace zzg
