#pragma once

// Exact linear algebra over Q on Eigen dense storage.

#include <Eigen/Core>

#include <map>
#include <optional>
#include <vector>

#include "zzgraded/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<zzg::Rational> : GenericNumTraits<zzg::Rational> {
  using Real = zzg::Rational;
  using NonInteger = zzg::Rational;
  using Literal = zzg::Rational;
  using Nested = zzg::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace zzg {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVectorQ = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

/// Reduced row echelon form of a matrix.
struct RowEchelon {
  MatrixQ reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

RowEchelon rref(MatrixQ m);

/// Basis of {x : A x = 0}, one column per free variable.
MatrixQ nullspace(const MatrixQ& a);

/// Incremental Gauss-Jordan elimination for A x = b, fed one equation at
/// a time. The stored basis is kept fully reduced, so sparse incoming rows
/// are cheap to reduce. Optionally tracks, for every basis row, the linear
/// combination of input equations that produced it.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(Eigen::Index unknowns, bool track_combinations = false);

  /// Adds the equation row . x = rhs. Returns false once the system has
  /// become inconsistent (further rows are ignored).
  bool add(const RowVectorQ& row, const Rational& rhs);
  bool add_sparse(const std::map<Eigen::Index, Rational>& row, const Rational& rhs);

  bool consistent() const { return !conflict_.has_value(); }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots_.size()); }
  Eigen::Index unknowns() const { return n_; }
  std::size_t equations_seen() const { return seen_; }

  /// Input equations whose combination reads 0 = nonzero.
  const std::optional<std::map<std::size_t, Rational>>& conflict() const { return conflict_; }
  /// Input equations whose rows became pivots, in insertion order.
  std::vector<std::size_t> pivot_sources() const;

  /// Solution with every free variable set to zero.
  VectorQ particular_solution() const;
  /// Nullspace basis of the coefficient matrix, one column per free variable.
  MatrixQ nullspace() const;
  /// Unknowns whose value is the same for every solution.
  std::vector<bool> determined() const;

 private:
  void reduce(RowVectorQ& row, Rational& rhs, std::map<std::size_t, Rational>* combo) const;

  Eigen::Index n_;
  bool track_;
  std::vector<RowVectorQ> rows_;
  std::vector<Rational> rhs_;
  std::vector<Eigen::Index> pivots_;
  std::vector<std::map<std::size_t, Rational>> combos_;
  std::vector<std::size_t> sources_;
  std::map<Eigen::Index, std::size_t> pivot_row_;
  std::optional<std::map<std::size_t, Rational>> conflict_;
  std::size_t seen_ = 0;
};

/// Minimal (irreducible) inconsistent subset of the equations A x = b, given
/// as row indices into A; empty when the system is consistent.
std::vector<Eigen::Index> minimal_inconsistent_subset(const MatrixQ& a, const VectorQ& b);

}  // namespace zzg
