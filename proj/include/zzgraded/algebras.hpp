#pragma once

// Z x Z-graded Lie algebra families given by explicit structure constants.

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zzgraded/element.hpp"

namespace zzg {

/// Raised for basis indices outside an algebra's index set, or parameters
/// violating a family's constraints.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Family { Vir, D, BlockExt, BPlusMinus1, BPlusPlus1, C, CBar };

std::string_view family_name(Family f);
/// Accepts vir, d, block, bplus-, bplus+, c, cbar.
Family parse_family(std::string_view name);
bool has_central_extension(Family f);

/// The rational data that fixes the L-part of every bracket.
struct StructureParams {
  Family family = Family::Vir;
  Rational alpha{1};
  Rational beta{0};
  /// Use the target L_{i+l, k+j} printed for the C family instead of the
  /// graded target L_{i+k, j+l}. Diagnostic only.
  bool literal_c_target = false;
};

/// [L_a, L_b] restricted to its L-part: coefficient and target index.
/// The coefficient is reported even when the target is not a basis index.
struct LTerm {
  GradedIndex target;
  Rational coeff;
};

/// Rational multipliers of the central parameters in a bracket:
/// c1 gets w1 * a1, c2 gets w2 * a2 + w2p * a2p.
struct CentralWeights {
  bool c1 = false;
  bool c2 = false;
  Rational w1, w2, w2p;
};

bool in_domain(const StructureParams& p, GradedIndex g);
/// Degree of c1 / c2 when that generator exists for the family.
std::optional<GradedIndex> central_degree(const StructureParams& p, BasisKind kind);
/// i!/j! for 0 <= j <= i, zero otherwise.
Rational factorial_ratio(std::int64_t i, std::int64_t j);
/// Structure constant of the C family for the ordered pair ((i,j),(k,l)),
/// including the antisymmetric extension of the case table.
Rational c_family_coefficient(const Rational& alpha, GradedIndex a, GradedIndex b);
LTerm l_bracket(const StructureParams& p, GradedIndex a, GradedIndex b);
CentralWeights central_weights(const StructureParams& p, GradedIndex a, GradedIndex b);
void validate(const StructureParams& p);

/// Family tag plus parameters. The central parameters a1, a2, a2p may be
/// symbolic (Scalar = MultiPoly), which turns every Jacobi sweep into a
/// 2-cocycle check for all parameter values at once.
template <class Scalar>
struct AlgebraSpec {
  using scalar_type = Scalar;

  StructureParams params;
  Scalar a1{0}, a2{0}, a2p{0};

  static AlgebraSpec vir(const Rational& alpha) { return make({Family::Vir, alpha, 0}); }
  static AlgebraSpec d(const Rational& alpha, const Rational& beta) { return make({Family::D, alpha, beta}); }
  static AlgebraSpec block(const Rational& alpha, const Rational& beta, Scalar a1 = 0, Scalar a2 = 0,
                           Scalar a2p = 0) {
    return make({Family::BlockExt, alpha, beta}, a1, a2, a2p);
  }
  /// B+(alpha, sign; a1, a2, a2p); sign = -1 keeps j >= -1, sign = +1 keeps j <= 1.
  static AlgebraSpec bplus(int sign, const Rational& alpha, Scalar a1 = 0, Scalar a2 = 0, Scalar a2p = 0) {
    if (sign != 1 && sign != -1) throw DomainError("B+ requires beta = +1 or -1");
    return make({sign < 0 ? Family::BPlusMinus1 : Family::BPlusPlus1, alpha, Rational(sign)}, a1, a2, a2p);
  }
  static AlgebraSpec c(const Rational& alpha) { return make({Family::C, alpha, 0}); }
  static AlgebraSpec cbar(const Rational& alpha) { return make({Family::CBar, alpha, 0}); }

  static AlgebraSpec make(StructureParams p, Scalar a1 = 0, Scalar a2 = 0, Scalar a2p = 0) {
    validate(p);
    AlgebraSpec s;
    s.params = p;
    if (has_central_extension(p.family)) {
      s.a1 = std::move(a1);
      s.a2 = std::move(a2);
      s.a2p = std::move(a2p);
    }
    return s;
  }

  Family family() const { return params.family; }

  bool contains(GradedIndex g) const { return in_domain(params, g); }

  std::optional<GradedIndex> degree_of(const BasisElement& b) const {
    if (b.kind == BasisKind::L) return contains(b.index) ? std::optional(b.index) : std::nullopt;
    return central_degree(params, b.kind);
  }

  /// [L_a, L_b] with terms outside the index set dropped.
  Element<Scalar> basis_bracket(GradedIndex a, GradedIndex b) const {
    if (!contains(a) || !contains(b)) throw DomainError("basis index outside the algebra");
    Element<Scalar> out;
    LTerm l = l_bracket(params, a, b);
    if (!l.coeff.is_zero() && contains(l.target)) out.add_term(BasisElement::L(l.target), Scalar(l.coeff));
    if (has_central_extension(params.family)) {
      CentralWeights w = central_weights(params, a, b);
      if (w.c1) out.add_term(BasisElement::C1(), Scalar(w.w1) * a1);
      if (w.c2) out.add_term(BasisElement::C2(), Scalar(w.w2) * a2 + Scalar(w.w2p) * a2p);
    }
    return out;
  }
};

/// Anything that exposes a graded basis and its brackets.
template <class M>
concept LieModel = requires(const M& m, GradedIndex g, BasisElement b) {
  typename M::scalar_type;
  { m.contains(g) } -> std::convertible_to<bool>;
  { m.basis_bracket(g, g) } -> std::same_as<Element<typename M::scalar_type>>;
  { m.degree_of(b) } -> std::same_as<std::optional<GradedIndex>>;
};

template <class Scalar>
bool in_domain(const AlgebraSpec<Scalar>& spec, GradedIndex g) {
  return spec.contains(g);
}

template <LieModel M>
Element<typename M::scalar_type> basis_bracket(const M& m, GradedIndex a, GradedIndex b) {
  return m.basis_bracket(a, b);
}

/// Bilinear extension of basis_bracket; central generators bracket to zero.
template <LieModel M>
Element<typename M::scalar_type> bracket(const M& m, const Element<typename M::scalar_type>& x,
                                         const Element<typename M::scalar_type>& y) {
  using Scalar = typename M::scalar_type;
  for (const auto* e : {&x, &y})
    for (const auto& [b, c] : e->terms())
      if (!m.degree_of(b)) throw DomainError("element term " + b.str() + " outside the algebra");
  Element<Scalar> out;
  for (const auto& [bx, cx] : x.terms()) {
    if (bx.is_central()) continue;
    for (const auto& [by, cy] : y.terms()) {
      if (by.is_central()) continue;
      Element<Scalar> term = m.basis_bracket(bx.index, by.index);
      term *= cx * cy;
      out += term;
    }
  }
  return out;
}

/// Realizes A / A_{j < min_j} for an ideal spanned by the lower half-plane:
/// restricts the basis to j >= min_j and drops L-terms that land below it.
template <LieModel M>
class HalfPlaneQuotient {
 public:
  using scalar_type = typename M::scalar_type;

  HalfPlaneQuotient(M base, std::int64_t min_j) : base_(std::move(base)), min_j_(min_j) {}

  bool contains(GradedIndex g) const { return g.j >= min_j_ && base_.contains(g); }
  std::optional<GradedIndex> degree_of(const BasisElement& b) const {
    if (b.kind == BasisKind::L) return contains(b.index) ? std::optional(b.index) : std::nullopt;
    return base_.degree_of(b);
  }
  Element<scalar_type> basis_bracket(GradedIndex a, GradedIndex b) const {
    if (!contains(a) || !contains(b)) throw DomainError("basis index outside the quotient");
    Element<scalar_type> out;
    const Element<scalar_type> full = base_.basis_bracket(a, b);
    for (const auto& [e, c] : full.terms())
      if (e.is_central() || e.index.j >= min_j_) out.add_term(e, c);
    return out;
  }

 private:
  M base_;
  std::int64_t min_j_;
};

/// Indices (i, j) with |i|, |j| <= window in lexicographic order.
std::vector<GradedIndex> window_indices(int window);

template <class Scalar>
struct TableRow {
  GradedIndex left, right;
  Element<Scalar> result;
};

/// Every basis bracket over the window, pairs in lexicographic order.
template <LieModel M>
std::vector<TableRow<typename M::scalar_type>> structure_table(const M& m, int window) {
  if (window < 0) throw UsageError("window must be non-negative");
  std::vector<GradedIndex> idx;
  for (auto g : window_indices(window))
    if (m.contains(g)) idx.push_back(g);
  std::vector<TableRow<typename M::scalar_type>> rows;
  rows.reserve(idx.size() * idx.size());
  for (auto a : idx)
    for (auto b : idx) rows.push_back({a, b, m.basis_bracket(a, b)});
  return rows;
}

}  // namespace zzg
