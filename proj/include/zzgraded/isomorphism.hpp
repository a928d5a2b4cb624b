#pragma once

// Diagonal isomorphism search between two graded models on a window.
//
// A candidate map sends each basis element e of A to lambda_e * sigma(e),
// where sigma is a fixed basis correspondence (an L index may go to a central
// generator). For every window pair (a,b) and every basis element t on
// either side of the bracket, the homomorphism condition reads
//   c_t * lambda_t = lambda_a * lambda_b * d_sigma(t),
// which is a monomial equation in the lambdas once both coefficients are
// nonzero; a one-sided zero is an immediate obstruction.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zzgraded/algebras.hpp"
#include "zzgraded/scaling.hpp"

namespace zzg {

using BasisMap = std::function<std::optional<BasisElement>(const BasisElement&)>;

struct IsomorphismResult {
  bool found = false;
  std::map<BasisElement, Rational> scaling;       // lambda per basis element of A
  std::map<BasisElement, BasisElement> images;    // sigma on every element met
  std::string obstruction;
  std::size_t equations = 0;
};

inline BasisMap identity_basis_map() {
  return [](const BasisElement& e) { return std::optional(e); };
}

template <LieModel A, LieModel B>
  requires std::same_as<typename A::scalar_type, Rational> && std::same_as<typename B::scalar_type, Rational>
IsomorphismResult find_diagonal_isomorphism(const A& a, const B& b, const BasisMap& sigma, int window) {
  IsomorphismResult out;
  std::map<BasisElement, std::size_t> unknown;
  std::map<BasisElement, BasisElement> preimage;

  auto image = [&](const BasisElement& e) -> std::optional<BasisElement> {
    if (auto it = out.images.find(e); it != out.images.end()) return it->second;
    auto s = sigma(e);
    if (!s || !b.degree_of(*s)) return std::nullopt;
    if (auto p = preimage.find(*s); p != preimage.end() && p->second != e) return std::nullopt;
    out.images.emplace(e, *s);
    preimage.emplace(*s, e);
    return s;
  };
  auto var = [&](const BasisElement& e) { return unknown.try_emplace(e, unknown.size()).first->second; };
  auto fail = [&](std::string why) {
    out.found = false;
    out.obstruction = std::move(why);
    out.scaling.clear();
    return out;
  };

  std::vector<GradedIndex> idx;
  for (auto g : window_indices(window))
    if (a.contains(g)) idx.push_back(g);

  for (auto g : idx)
    if (!image(BasisElement::L(g))) return fail("no image for " + BasisElement::L(g).str());

  std::vector<MonomialEquation> eqs;
  for (auto x : idx) {
    for (auto y : idx) {
      const BasisElement ex = BasisElement::L(x), ey = BasisElement::L(y);
      auto sx = image(ex), sy = image(ey);
      var(ex);
      var(ey);

      const Element<Rational> lhs = a.basis_bracket(x, y);
      Element<Rational> rhs;
      if (!sx->is_central() && !sy->is_central()) rhs = b.basis_bracket(sx->index, sy->index);

      std::map<BasisElement, std::pair<Rational, Rational>> matched;  // A-element -> (c, d)
      for (const auto& [t, c] : lhs.terms()) {
        auto st = image(t);
        if (!st) return fail("no image for " + t.str());
        matched[t] = {c, rhs.coefficient(*st)};
      }
      for (const auto& [s, d] : rhs.terms()) {
        auto p = preimage.find(s);
        if (p == preimage.end() && !s.is_central() && image(s) == s) p = preimage.find(s);
        if (p == preimage.end()) return fail("no preimage for " + s.str());
        matched[p->second].second = d;
      }

      for (const auto& [t, cd] : matched) {
        const auto& [c, d] = cd;
        if (c.is_zero() != d.is_zero())
          return fail("[" + ex.str() + ", " + ey.str() + "] has " + (c.is_zero() ? "no " : "a ") + t.str() +
                      " term while its image " + (d.is_zero() ? "has none" : "does"));
        if (c.is_zero()) continue;
        MonomialEquation e;
        e.exponents[var(t)] += 1;
        e.exponents[var(ex)] -= 1;
        e.exponents[var(ey)] -= 1;
        e.ratio = d / c;
        eqs.push_back(std::move(e));
      }
    }
  }
  out.equations = eqs.size();

  ScalingSolution sol = solve_monomial_system(unknown.size(), eqs);
  if (!sol.values) return fail(sol.obstruction);
  for (const auto& [e, u] : unknown) out.scaling.emplace(e, (*sol.values)[u]);
  out.found = true;
  return out;
}

}  // namespace zzg
