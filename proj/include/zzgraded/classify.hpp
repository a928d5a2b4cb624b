#pragma once

// The coefficient recurrence behind the rank-two classification:
//
//   (-alpha + i + bm1 k) c(i+k, j) + (alpha + j + b1 k) c(i, j+k) = (i + j - k) c(i, j),
//   c(0,0) = 2 alpha,
//
// where c(i,j) is the coefficient of [L_{i,-1}, L_{j,1}] = c(i,j) L_{i+j,0},
// b1 = beta1 and bm1 = beta_{-1}. Also: the polynomial constraints on
// (beta1, beta_{-1}) that follow from it, and the homogeneous d' system of
// the beta1 = 1/2 branch.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zzgraded/element.hpp"
#include "zzgraded/multipoly.hpp"

namespace zzg {

/// Ring with symbols alpha, beta1, betam1, i, k.
RingPtr classification_ring();

/// alpha, beta1, beta_{-1}; each either a rational constant or its symbol.
struct ClassificationParams {
  MultiPoly alpha, beta1, betam1;

  static ClassificationParams numeric(const Rational& alpha, const Rational& beta1, const Rational& betam1);
  static ClassificationParams symbolic();

  bool is_numeric() const;
  /// Throws UsageError unless numeric.
  std::array<Rational, 3> values() const;
};

/// sum_u coeffs[u] * x_u = rhs over unknowns x_(i,j) named `unknown`.
struct LinearRelation {
  std::map<GradedIndex, MultiPoly> coeffs;
  MultiPoly rhs;

  bool trivial() const { return coeffs.empty() && rhs.is_zero(); }
  std::string str(const std::string& unknown = "c") const;
};

struct RecurrenceInstance {
  std::array<std::int64_t, 3> ijk{};
  LinearRelation relation;
  /// The side condition fails at these numeric parameters. Symbolic
  /// parameters never skip: the guard only bites at special values.
  bool skipped = false;
};

/// The recurrence at (i, j, k), with the side condition
/// [(i - alpha)(i + k - alpha) != 0 or bm1 not in {0,1}] and
/// [(j + alpha)(j + k + alpha) != 0 or b1 not in {0,1}] evaluated when the
/// parameters are numeric.
RecurrenceInstance recurrence_equation(const ClassificationParams& p, std::int64_t i, std::int64_t j, std::int64_t k);

/// Moves the c(0,0) terms of a relation to the right-hand side using c(0,0) = 2 alpha.
LinearRelation normalize_origin(const LinearRelation& r, const MultiPoly& alpha);

/// Windowed linear system in the unknowns c(i,j), |i|, |j| <= W.
struct CoeffSystem {
  std::string unknown = "c";
  std::vector<GradedIndex> unknowns;
  std::vector<LinearRelation> equations;
  std::vector<std::string> sources;  // provenance label per equation, e.g. "(1,0,-2)"
  std::size_t skipped = 0;
  std::map<GradedIndex, MultiPoly> normalization;
};

/// All admissible instances with |i|, |j|, |k| <= W whose three unknowns lie
/// in the window, plus c(0,0) = 2 alpha as the last equation.
CoeffSystem build_c_system(const ClassificationParams& p, int window);
/// The system formed by exactly the given (i, j, k) instances (guards still
/// applied), plus the normalization.
CoeffSystem build_c_subsystem(const ClassificationParams& p, const std::vector<std::array<std::int64_t, 3>>& instances);

struct WindowSolution {
  bool feasible = false;
  std::map<GradedIndex, Rational> values;  // unknowns with the same value on every solution
  std::vector<GradedIndex> undetermined;
  bool unique = false;  // every unknown determined
  std::size_t equations = 0;
  std::size_t skipped = 0;
  std::size_t rank = 0;
  /// Minimal inconsistent subset when infeasible: equation indices and text.
  std::vector<std::size_t> certificate;
  std::vector<std::string> certificate_text;
  std::vector<std::string> notes;
};

/// Exact solve of a numeric CoeffSystem.
WindowSolution solve_system(const CoeffSystem& system);
WindowSolution solve_c_window(const ClassificationParams& p, int window);

/// (0,k,k), (k,0,k), (0,0,2k): enough to pin c(k,k), c(0,2k), c(2k,0).
std::vector<std::array<std::int64_t, 3>> diagonal_instances(std::int64_t k);

// Closed forms of the solution on the three solvable branches.

/// beta1 = -2 - beta_{-1}, beta = beta1 + 1: c(i,j) = 2 alpha + (beta - 1) i + (beta + 1) j.
Rational linear_branch_value(const Rational& alpha, const Rational& beta, std::int64_t i, std::int64_t j);

struct DiagonalValues {
  std::optional<Rational> c_0_2k, c_2k_0, c_2k_2k;  // absent at poles
};
/// beta1 = beta_{-1}: c(0,2k), c(2k,0).
DiagonalValues equal_branch_values(const Rational& alpha, const Rational& beta1, std::int64_t k);
/// beta1 = -beta_{-1}: c(0,2k), c(2k,0), c(2k,2k).
DiagonalValues opposite_branch_values(const Rational& alpha, const Rational& beta1, std::int64_t k);

// Constraint polynomials.

/// d_k = (-a + bm1 k)(-a + (1+bm1) k)(a + 2 b1 k) + (a + b1 k)(a + (1+b1) k)(-a + 2 bm1 k),
/// with k replaced by `k` (any polynomial over classification_ring()).
MultiPoly determinant_dk(const MultiPoly& k);

struct ConstraintPolys {
  MultiPoly dk;           // d_k in the symbol k
  MultiPoly relation;     // the combined relation in i; must vanish identically
  MultiPoly p6;           // coefficient of i^6
  MultiPoly p4;           // coefficient of i^4 at betam1 = 0
  MultiPoly p4_mirror;    // coefficient of i^4 at beta1 = 0
  MultiPoly dk_leading;   // coefficient of k^2 in d_k at betam1 = 0
};

/// Eliminating c(0,2k) and c(0,-2k) between the diagonal instances and the
/// origin-symmetric combination of the recurrence leaves
///   2 P(i)(a + 2 b1 i) d_{-i} + 2 P(-i)(a - 2 b1 i) d_i + E d_i d_{-i} = 0,
/// P(i) = (-a + bm1 i)(-a + (1+bm1) i), E = (bm1 - b1)(bm1 + b1 - 1) - 2.
ConstraintPolys derive_constraint_polys();

/// The factored forms the constraints are compared against.
MultiPoly reference_p4();  // b1^2 (b1+1)(b1+2)(b1-1)(b1+3) a^2
MultiPoly reference_p6();  // -4 (b1-bm1)(b1+bm1)(b1+bm1+1)(b1+bm1+2) b1^2 bm1^2

/// s with p = s q for a nonzero rational s, via exact division.
std::optional<Rational> rational_multiple(const MultiPoly& p, const MultiPoly& q);

/// beta1 = slope * betam1 + offset.
struct BetaRelation {
  Rational slope, offset;
  std::string str() const;
  friend auto operator<=>(const BetaRelation&, const BetaRelation&) = default;
};

struct CaseSplit {
  std::vector<BetaRelation> relations;
  std::vector<std::pair<Rational, Rational>> exceptional;  // (beta1, betam1)
};

/// Linear relations annihilating p6 (slope, offset over the candidate set,
/// slope != 0) and the roots of p4 and its mirror not covered by them.
CaseSplit enumerate_case_split(const std::set<Rational>& candidates = default_root_candidates());

// The d' system d'(i,j)(4a - 7i - 7j - k) = d'(0,i+j)(4a + 9i - 7j - k).

struct DPrimeCertificate {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  bool only_zero = false;               // rank == unknowns
  std::vector<std::string> pivot_rows;  // a nonsingular square subset, as (i,j,k)
  /// Coefficient of k in each instance, as relations in the d' unknowns.
  std::vector<LinearRelation> k_relations;
};

DPrimeCertificate dprime_impossibility(const Rational& alpha, int window);

}  // namespace zzg
