#pragma once

// Modules of the intermediate series over the centerless Virasoro algebra
// [L_i, L_j] = (j - i) L_{i+j}, with basis {v_k | k in Z}.

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zzgraded/multipoly.hpp"
#include "zzgraded/rational.hpp"
#include "zzgraded/report.hpp"

namespace zzg {

/// Finite combination of the v_k; zero coefficients are never stored.
class ModVector {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  ModVector() = default;
  static ModVector basis(std::int64_t k, const Rational& c = Rational(1)) {
    ModVector v;
    v.add_term(k, c);
    return v;
  }

  void add_term(std::int64_t k, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  Rational coefficient(std::int64_t k) const;

  ModVector& operator+=(const ModVector& o);
  ModVector& operator-=(const ModVector& o);
  ModVector& operator*=(const Rational& s);
  friend ModVector operator+(ModVector a, const ModVector& b) { return a += b; }
  friend ModVector operator-(ModVector a, const ModVector& b) { return a -= b; }
  friend ModVector operator*(const Rational& s, ModVector a) { return a *= s; }
  friend bool operator==(const ModVector&, const ModVector&) = default;

  /// "{}" or "{v0: 1/2, v3: -1/1}".
  std::string str() const;

 private:
  Terms terms_;
};

enum class ModuleFamily { A_AB, A_Paren, B_Paren };

std::string_view module_family_name(ModuleFamily f);
/// Accepts a, a-paren, b-paren.
ModuleFamily parse_module_family(std::string_view name);

/// A_{alpha,beta}, A(alpha) or B(alpha). With `omitted` set, the module is
/// the subquotient on span{v_k : k != omitted}: the same formulas with the
/// v_omitted component discarded.
struct ModuleSpec {
  ModuleFamily family = ModuleFamily::A_AB;
  Rational alpha{0};
  Rational beta{0};
  std::optional<std::int64_t> omitted;

  static ModuleSpec a(const Rational& alpha, const Rational& beta) { return {ModuleFamily::A_AB, alpha, beta, {}}; }
  static ModuleSpec a_paren(const Rational& alpha) { return {ModuleFamily::A_Paren, alpha, 0, {}}; }
  static ModuleSpec b_paren(const Rational& alpha) { return {ModuleFamily::B_Paren, alpha, 0, {}}; }

  bool contains(std::int64_t k) const { return !omitted || *omitted != k; }
  ModVector act_basis(std::int64_t i, std::int64_t k) const;
  std::string str() const;
};

/// Anything with a weight basis and an action of the L_i on it.
template <class M>
concept ModuleModel = requires(const M& m, std::int64_t i) {
  { m.contains(i) } -> std::convertible_to<bool>;
  { m.act_basis(i, i) } -> std::same_as<ModVector>;
};

template <ModuleModel M>
ModVector act(const M& m, std::int64_t i, const ModVector& x) {
  ModVector out;
  for (const auto& [k, c] : x.terms()) {
    if (!m.contains(k)) throw UsageError("v" + std::to_string(k) + " is not in the module");
    out += c * m.act_basis(i, k);
  }
  return out;
}

/// L_i L_j v_k - L_j L_i v_k = (j - i) L_{i+j} v_k for |i|, |j|, |k| <= W.
template <ModuleModel M>
ViolationReport check_module_axiom(const M& m, int window) {
  ViolationReport r{"module-axiom", {}, 0};
  for (std::int64_t i = -window; i <= window; ++i)
    for (std::int64_t j = -window; j <= window; ++j)
      for (std::int64_t k = -window; k <= window; ++k) {
        if (!m.contains(k)) continue;
        ++r.checked_count;
        const ModVector v = ModVector::basis(k);
        ModVector d = act(m, i, act(m, j, v)) - act(m, j, act(m, i, v));
        d -= Rational(j - i) * act(m, i + j, v);
        if (!d.zero()) r.witnesses.push_back({{i, j, k}, d.str()});
      }
  return r;
}

enum class SubquotientKind {
  Irreducible,       // no degeneracy: the module itself
  TrivialSubmodule,  // v_k0 spans a trivial submodule; A' is the quotient
  Complement,        // span{v_k : k != k0} is a submodule; A' is that
};

struct Subquotient {
  SubquotientKind kind = SubquotientKind::Irreducible;
  std::optional<std::int64_t> k0;
  ModuleSpec module;  // A' with `omitted` = k0 when reducible
  /// Coefficients of L_i v_k0 -> v_{i+k0} and of L_i v_{k0-i} -> v_k0 as
  /// polynomials in i; reducibility is read off their vanishing.
  MultiPoly out_coefficient, in_coefficient;
};

/// The nontrivial irreducible subquotient A' of A_{alpha,beta}.
Subquotient irreducible_subquotient(const ModuleSpec& m);

struct IntertwinerResult {
  std::optional<std::map<std::int64_t, Rational>> witness;  // every c_k nonzero
  std::size_t nullity = 0;
  std::size_t equations = 0;
  std::vector<std::int64_t> forced_zero;  // indices vanishing on every solution
};

/// Solves c_{i+k} a1(i,k) = c_k a2(i,k) for diagonal c over |k| <= W and every
/// |i| <= W keeping i + k in the window. Witnesses are normalized to 1 at the
/// smallest |k| in the window (positive k first).
IntertwinerResult find_intertwiner(const ModuleSpec& m1, const ModuleSpec& m2, int window);

/// Re-applies c to both actions and reports every (i, k) where
/// c-rescaled m1 differs from m2.
ViolationReport check_intertwiner(const ModuleSpec& m1, const ModuleSpec& m2,
                                  const std::map<std::int64_t, Rational>& c, int window);

}  // namespace zzg
