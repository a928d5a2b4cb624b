#include <algorithm>

#include "zzgraded/classify.hpp"

namespace zzg {

namespace {

struct Symbols {
  MultiPoly a, b1, bm1, i, k;
};

Symbols symbols() {
  const RingPtr r = classification_ring();
  return {MultiPoly::variable(r, "alpha"), MultiPoly::variable(r, "beta1"), MultiPoly::variable(r, "betam1"),
          MultiPoly::variable(r, "i"), MultiPoly::variable(r, "k")};
}

MultiPoly one() { return MultiPoly::constant(classification_ring(), 1); }

}  // namespace

MultiPoly determinant_dk(const MultiPoly& k) {
  const Symbols s = symbols();
  return (-s.a + s.bm1 * k) * (-s.a + (one() + s.bm1) * k) * (s.a + s.b1.scale(2) * k) +
         (s.a + s.b1 * k) * (s.a + (one() + s.b1) * k) * (-s.a + s.bm1.scale(2) * k);
}

ConstraintPolys derive_constraint_polys() {
  const Symbols s = symbols();
  auto P = [&](const MultiPoly& x) { return (-s.a + s.bm1 * x) * (-s.a + (one() + s.bm1) * x); };
  const MultiPoly d_pos = determinant_dk(s.i), d_neg = determinant_dk(-s.i);
  const MultiPoly e = (s.bm1 - s.b1) * (s.bm1 + s.b1 - one()) - MultiPoly(2);

  ConstraintPolys out;
  out.dk = determinant_dk(s.k);
  out.relation = (P(s.i) * (s.a + s.b1.scale(2) * s.i) * d_neg).scale(2) +
                 (P(-s.i) * (s.a - s.b1.scale(2) * s.i) * d_pos).scale(2) + e * d_pos * d_neg;
  out.p6 = out.relation.coefficient_of("i", 6);
  const MultiPoly zero = MultiPoly::constant(classification_ring(), 0);
  out.p4 = out.relation.substitute("betam1", zero).coefficient_of("i", 4);
  out.p4_mirror = out.relation.substitute("beta1", zero).coefficient_of("i", 4);
  out.dk_leading = out.dk.substitute("betam1", zero).coefficient_of("k", 2);
  return out;
}

MultiPoly reference_p4() {
  const Symbols s = symbols();
  const MultiPoly& b = s.b1;
  return b * b * (b + one()) * (b + MultiPoly(2)) * (b - one()) * (b + MultiPoly(3)) * s.a * s.a;
}

MultiPoly reference_p6() {
  const Symbols s = symbols();
  const MultiPoly sum = s.b1 + s.bm1;
  return ((s.b1 - s.bm1) * sum * (sum + one()) * (sum + MultiPoly(2)) * s.b1 * s.b1 * s.bm1 * s.bm1).scale(-4);
}

std::optional<Rational> rational_multiple(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) return std::nullopt;
  auto quot = p.divide_exact(q);
  if (!quot) return std::nullopt;
  auto c = quot->constant_value();
  if (!c || c->is_zero()) return std::nullopt;
  return c;
}

std::string BetaRelation::str() const {
  std::string out = "beta1 = ";
  if (slope == Rational(1))
    out += "betam1";
  else if (slope == Rational(-1))
    out += "-betam1";
  else
    out += slope.str() + "*betam1";
  if (offset.sign() > 0) out += " + " + offset.str();
  if (offset.sign() < 0) out += " - " + (-offset).str();
  return out;
}

CaseSplit enumerate_case_split(const std::set<Rational>& candidates) {
  const ConstraintPolys polys = derive_constraint_polys();
  const Symbols s = symbols();
  CaseSplit out;

  // beta1 = slope * betam1 + offset kills p6 identically.
  for (const auto& slope : candidates) {
    if (slope.is_zero()) continue;
    for (const auto& offset : candidates)
      if (polys.p6.substitute("beta1", s.bm1.scale(slope) + MultiPoly(offset)).is_zero())
        out.relations.push_back({slope, offset});
  }
  auto covered = [&](const Rational& b1, const Rational& bm1) {
    return std::any_of(out.relations.begin(), out.relations.end(),
                       [&](const BetaRelation& r) { return b1 == r.slope * bm1 + r.offset; });
  };

  // p4 is alpha^2 times a polynomial in beta1; alpha != 0, so scan at alpha = 1.
  const MultiPoly one_alpha = MultiPoly::constant(classification_ring(), 1);
  for (const auto& root : rational_root_scan(polys.p4.substitute("alpha", one_alpha), candidates))
    if (!covered(root, 0)) out.exceptional.emplace_back(root, Rational(0));
  for (const auto& root : rational_root_scan(polys.p4_mirror.substitute("alpha", one_alpha), candidates))
    if (!covered(0, root)) out.exceptional.emplace_back(Rational(0), root);
  return out;
}

}  // namespace zzg
