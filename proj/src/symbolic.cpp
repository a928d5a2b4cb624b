#include "zzgraded/symbolic.hpp"

namespace zzg {

RingPtr jacobi_ring() {
  static const RingPtr ring = PolyRing::make({"i", "j", "k", "l", "m", "n", "alpha", "beta"});
  return ring;
}

MultiPoly cyclic_jacobi_sum(const StructureFormula& coeff) {
  const RingPtr ring = jacobi_ring();
  auto v = [&](const char* s) { return MultiPoly::variable(ring, s); };
  const MultiPoly xi = v("i"), xj = v("j"), yi = v("k"), yj = v("l"), zi = v("m"), zj = v("n");
  // [x,[y,z]] = c(y,z) c(x, y+z) L_{x+y+z}
  auto nested = [&](const MultiPoly& ai, const MultiPoly& aj, const MultiPoly& bi, const MultiPoly& bj,
                    const MultiPoly& ci, const MultiPoly& cj) {
    return coeff(bi, bj, ci, cj) * coeff(ai, aj, bi + ci, bj + cj);
  };
  return nested(xi, xj, yi, yj, zi, zj) + nested(yi, yj, zi, zj, xi, xj) + nested(zi, zj, xi, xj, yi, yj);
}

StructureFormula d_formula(const RingPtr& ring) {
  MultiPoly alpha = MultiPoly::variable(ring, "alpha");
  MultiPoly beta = MultiPoly::variable(ring, "beta");
  return [=](const MultiPoly& i, const MultiPoly& j, const MultiPoly& k, const MultiPoly& l) {
    return beta * (i * l - j * k) + (k - i) + (l - j) * alpha;
  };
}

StructureFormula vir_formula(const RingPtr& ring) {
  MultiPoly alpha = MultiPoly::variable(ring, "alpha");
  return [=](const MultiPoly& i, const MultiPoly& j, const MultiPoly& k, const MultiPoly& l) {
    return (k - i) + (l - j) * alpha;
  };
}

StructureFormula block_formula(const RingPtr& ring) {
  MultiPoly alpha = MultiPoly::variable(ring, "alpha");
  MultiPoly beta = MultiPoly::variable(ring, "beta");
  return [=](const MultiPoly& i, const MultiPoly& j, const MultiPoly& k, const MultiPoly& l) {
    return (i + alpha) * (l - beta) - (j - beta) * (k + alpha);
  };
}

bool symbolic_jacobi(const StructureFormula& coeff) { return cyclic_jacobi_sum(coeff).is_zero(); }

bool symbolic_jacobi_d() { return symbolic_jacobi(d_formula(jacobi_ring())); }

}  // namespace zzg
