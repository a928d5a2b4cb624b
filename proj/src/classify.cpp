#include "zzgraded/classify.hpp"

#include <cstdlib>

#include "zzgraded/echelon.hpp"

namespace zzg {

RingPtr classification_ring() {
  static const RingPtr ring = PolyRing::make({"alpha", "beta1", "betam1", "i", "k"});
  return ring;
}

ClassificationParams ClassificationParams::numeric(const Rational& alpha, const Rational& beta1,
                                                   const Rational& betam1) {
  if (alpha.is_zero()) throw UsageError("alpha must be nonzero");
  const RingPtr r = classification_ring();
  return {MultiPoly::constant(r, alpha), MultiPoly::constant(r, beta1), MultiPoly::constant(r, betam1)};
}

ClassificationParams ClassificationParams::symbolic() {
  const RingPtr r = classification_ring();
  return {MultiPoly::variable(r, "alpha"), MultiPoly::variable(r, "beta1"), MultiPoly::variable(r, "betam1")};
}

bool ClassificationParams::is_numeric() const {
  return alpha.is_constant() && beta1.is_constant() && betam1.is_constant();
}

std::array<Rational, 3> ClassificationParams::values() const {
  if (!is_numeric()) throw UsageError("parameters are symbolic");
  return {*alpha.constant_value(), *beta1.constant_value(), *betam1.constant_value()};
}

std::string LinearRelation::str(const std::string& unknown) const {
  std::string out;
  for (const auto& [u, c] : coeffs) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*" + unknown + "(" + std::to_string(u.i) + "," + std::to_string(u.j) + ")";
  }
  if (out.empty()) out = "0";
  return out + " = " + rhs.str();
}

namespace {

void add_coeff(LinearRelation& r, GradedIndex u, const MultiPoly& c) {
  MultiPoly& slot = r.coeffs[u];
  slot += c;
  if (slot.is_zero()) r.coeffs.erase(u);
}

bool guard_fails(const Rational& a, const Rational& b, std::int64_t x, std::int64_t y) {
  // (x - a)(y - a) == 0 and b in {0, 1}
  const bool vanishes = Rational(x) == a || Rational(y) == a;
  return vanishes && (b == Rational(0) || b == Rational(1));
}

std::string triple_str(std::int64_t i, std::int64_t j, std::int64_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

RecurrenceInstance recurrence_equation(const ClassificationParams& p, std::int64_t i, std::int64_t j,
                                       std::int64_t k) {
  RecurrenceInstance out;
  out.ijk = {i, j, k};
  if (p.is_numeric()) {
    const auto [a, b1, bm1] = p.values();
    out.skipped = guard_fails(a, bm1, i, i + k) || guard_fails(-a, b1, j, j + k);
  }
  LinearRelation& r = out.relation;
  r.rhs = MultiPoly::constant(classification_ring(), 0);
  add_coeff(r, {i + k, j}, -p.alpha + MultiPoly(i) + p.betam1 * MultiPoly(k));
  add_coeff(r, {i, j + k}, p.alpha + MultiPoly(j) + p.beta1 * MultiPoly(k));
  add_coeff(r, {i, j}, MultiPoly(-(i + j - k)));
  return out;
}

LinearRelation normalize_origin(const LinearRelation& r, const MultiPoly& alpha) {
  LinearRelation out = r;
  if (auto it = out.coeffs.find({0, 0}); it != out.coeffs.end()) {
    out.rhs -= it->second * alpha.scale(2);
    out.coeffs.erase(it);
  }
  return out;
}

namespace {

CoeffSystem empty_c_system(const ClassificationParams& p) {
  CoeffSystem s;
  s.normalization.emplace(GradedIndex{0, 0}, p.alpha.scale(2));
  return s;
}

void finish_c_system(CoeffSystem& s) {
  for (const auto& [u, v] : s.normalization) {
    LinearRelation n;
    n.coeffs.emplace(u, MultiPoly::constant(classification_ring(), 1));
    n.rhs = v;
    s.equations.push_back(std::move(n));
    s.sources.push_back("normalization");
  }
}

}  // namespace

CoeffSystem build_c_system(const ClassificationParams& p, int window) {
  if (window < 0) throw UsageError("window must be non-negative");
  CoeffSystem s = empty_c_system(p);
  const std::int64_t w = window;
  auto inside = [w](GradedIndex g) { return std::llabs(g.i) <= w && std::llabs(g.j) <= w; };
  for (std::int64_t i = -w; i <= w; ++i)
    for (std::int64_t j = -w; j <= w; ++j) s.unknowns.push_back({i, j});
  for (std::int64_t i = -w; i <= w; ++i)
    for (std::int64_t j = -w; j <= w; ++j)
      for (std::int64_t k = -w; k <= w; ++k) {
        if (!inside({i + k, j}) || !inside({i, j + k})) continue;
        RecurrenceInstance inst = recurrence_equation(p, i, j, k);
        if (inst.skipped) {
          ++s.skipped;
          continue;
        }
        if (inst.relation.trivial()) continue;
        s.equations.push_back(std::move(inst.relation));
        s.sources.push_back(triple_str(i, j, k));
      }
  finish_c_system(s);
  return s;
}

CoeffSystem build_c_subsystem(const ClassificationParams& p,
                              const std::vector<std::array<std::int64_t, 3>>& instances) {
  CoeffSystem s = empty_c_system(p);
  std::map<GradedIndex, int> seen;
  seen[{0, 0}];
  for (const auto& [i, j, k] : instances) {
    RecurrenceInstance inst = recurrence_equation(p, i, j, k);
    if (inst.skipped) {
      ++s.skipped;
      continue;
    }
    for (const auto& [u, c] : inst.relation.coeffs) seen[u];
    s.equations.push_back(std::move(inst.relation));
    s.sources.push_back(triple_str(i, j, k));
  }
  for (const auto& [u, unused] : seen) s.unknowns.push_back(u);
  finish_c_system(s);
  return s;
}

WindowSolution solve_system(const CoeffSystem& system) {
  std::map<GradedIndex, Eigen::Index> col;
  for (auto u : system.unknowns) col.emplace(u, static_cast<Eigen::Index>(col.size()));
  const auto n = static_cast<Eigen::Index>(col.size());

  auto constant = [](const MultiPoly& c) {
    auto v = c.constant_value();
    if (!v) throw UsageError("system has symbolic coefficients: " + c.str());
    return *v;
  };

  WindowSolution out;
  out.equations = system.equations.size();
  out.skipped = system.skipped;
  IncrementalEchelon ech(n, true);
  for (const auto& e : system.equations) {
    std::map<Eigen::Index, Rational> row;
    for (const auto& [u, c] : e.coeffs) {
      auto it = col.find(u);
      if (it == col.end()) throw UsageError("equation references an undeclared unknown");
      row.emplace(it->second, constant(c));
    }
    ech.add_sparse(row, constant(e.rhs));
  }
  out.rank = static_cast<std::size_t>(ech.rank());

  if (!ech.consistent()) {
    // Shrink the combination found by elimination to an irreducible subset.
    std::vector<std::size_t> support;
    for (const auto& [eq, w] : *ech.conflict()) support.push_back(eq);
    MatrixQ a = MatrixQ::Zero(static_cast<Eigen::Index>(support.size()), n);
    VectorQ b = VectorQ::Zero(static_cast<Eigen::Index>(support.size()));
    for (std::size_t r = 0; r < support.size(); ++r) {
      const auto& e = system.equations[support[r]];
      for (const auto& [u, c] : e.coeffs) a(static_cast<Eigen::Index>(r), col.at(u)) = constant(c);
      b(static_cast<Eigen::Index>(r)) = constant(e.rhs);
    }
    for (auto r : minimal_inconsistent_subset(a, b)) {
      const std::size_t eq = support[static_cast<std::size_t>(r)];
      out.certificate.push_back(eq);
      out.certificate_text.push_back(system.sources[eq] + ": " + system.equations[eq].str(system.unknown));
    }
    return out;
  }

  out.feasible = true;
  const VectorQ x = ech.particular_solution();
  const std::vector<bool> fixed = ech.determined();
  for (const auto& [u, c] : col) {
    if (fixed[static_cast<std::size_t>(c)])
      out.values.emplace(u, x(c));
    else
      out.undetermined.push_back(u);
  }
  out.unique = out.undetermined.empty();
  return out;
}

WindowSolution solve_c_window(const ClassificationParams& p, int window) {
  if (!p.is_numeric()) throw UsageError("solve_c_window needs numeric parameters");
  WindowSolution s = solve_system(build_c_system(p, window));
  const auto [a, b1, bm1] = p.values();
  auto special = [](const Rational& b) { return b == Rational(0) || b == Rational(1); };
  if (a.is_integer() && (special(b1) || special(bm1)))
    s.notes.push_back("alpha is an integer and a beta is 0 or 1: " + std::to_string(s.skipped) +
                      " instances skipped by the side condition; isolated undetermined values are expected");
  return s;
}

std::vector<std::array<std::int64_t, 3>> diagonal_instances(std::int64_t k) {
  return {{0, k, k}, {k, 0, k}, {0, 0, 2 * k}};
}

Rational linear_branch_value(const Rational& alpha, const Rational& beta, std::int64_t i, std::int64_t j) {
  return 2 * alpha + (beta - 1) * Rational(i) + (beta + 1) * Rational(j);
}

namespace {

std::optional<Rational> quotient(const Rational& num, const Rational& den) {
  if (den.is_zero()) return std::nullopt;
  return num / den;
}

}  // namespace

DiagonalValues equal_branch_values(const Rational& a, const Rational& b, std::int64_t k) {
  const Rational rk(k);
  const Rational den = a * a - 2 * b * b * (1 + b) * rk * rk;
  DiagonalValues v;
  v.c_0_2k = quotient(2 * a * (-a + b * rk) * (-a + (1 + b) * rk), den);
  v.c_2k_0 = quotient(2 * a * (a + b * rk) * (a + (1 + b) * rk), den);
  return v;
}

DiagonalValues opposite_branch_values(const Rational& a, const Rational& b, std::int64_t k) {
  const Rational rk(k);
  DiagonalValues v;
  v.c_0_2k = quotient(2 * a * (a + (b - 1) * rk), a + 2 * b * rk);
  v.c_2k_0 = quotient(2 * a * (a + (b + 1) * rk), a + 2 * b * rk);
  v.c_2k_2k = quotient(2 * a * (a + 2 * (b - 1) * rk) * (a + 2 * (b + 1) * rk), (a + 2 * b * rk) * (a + 4 * b * rk));
  return v;
}

DPrimeCertificate dprime_impossibility(const Rational& alpha, int window) {
  if (window < 0) throw UsageError("window must be non-negative");
  const std::int64_t w = window;
  std::map<GradedIndex, Eigen::Index> col;
  for (std::int64_t i = -w; i <= w; ++i)
    for (std::int64_t j = -w; j <= w; ++j)
      if (std::llabs(i + j) <= w) col.emplace(GradedIndex{i, j}, static_cast<Eigen::Index>(col.size()));

  DPrimeCertificate out;
  out.unknowns = col.size();
  IncrementalEchelon ech(static_cast<Eigen::Index>(col.size()));
  std::vector<std::string> sources;
  const RingPtr ring = classification_ring();
  const MultiPoly ks = MultiPoly::variable(ring, "k");
  const MultiPoly a = MultiPoly::constant(ring, alpha);

  for (std::int64_t i = -w; i <= w; ++i)
    for (std::int64_t j = -w; j <= w; ++j) {
      if (std::llabs(i + j) > w) continue;
      const GradedIndex u{i, j}, v{0, i + j};
      // Left minus right as a polynomial in k.
      LinearRelation sym;
      sym.rhs = MultiPoly::constant(ring, 0);
      add_coeff(sym, u, a.scale(4) - MultiPoly(7 * i + 7 * j) - ks);
      add_coeff(sym, v, -(a.scale(4) + MultiPoly(9 * i - 7 * j) - ks));
      LinearRelation kr;
      kr.rhs = MultiPoly::constant(ring, 0);
      for (const auto& [x, c] : sym.coeffs) add_coeff(kr, x, c.coefficient_of("k", 1));
      if (!kr.trivial()) out.k_relations.push_back(std::move(kr));

      for (std::int64_t k = -w; k <= w; ++k) {
        std::map<Eigen::Index, Rational> row;
        for (const auto& [x, c] : sym.coeffs) {
          Rational value = c.eval({{"k", Rational(k)}});
          if (!value.is_zero()) row[col.at(x)] += value;
        }
        ++out.equations;
        sources.push_back(triple_str(i, j, k));
        ech.add_sparse(row, 0);
      }
    }
  out.rank = static_cast<std::size_t>(ech.rank());
  out.only_zero = out.rank == out.unknowns;
  for (auto s : ech.pivot_sources()) out.pivot_rows.push_back(sources[s]);
  return out;
}

}  // namespace zzg
