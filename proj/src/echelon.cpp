#include "zzgraded/echelon.hpp"

#include <algorithm>

namespace zzg {

RowEchelon rref(MatrixQ m) {
  RowEchelon out;
  Eigen::Index lead_row = 0;
  for (Eigen::Index col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = lead_row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(lead_row));
    Rational inv = Rational(1) / m(lead_row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        if (!m(lead_row, c).is_zero()) m(r, c) -= f * m(lead_row, c);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

MatrixQ nullspace(const MatrixQ& a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  MatrixQ basis = MatrixQ::Zero(a.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    auto col = static_cast<Eigen::Index>(f);
    basis(free[f], col) = Rational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], col) = -e.reduced(static_cast<Eigen::Index>(r), free[f]);
  }
  return basis;
}

IncrementalEchelon::IncrementalEchelon(Eigen::Index unknowns, bool track_combinations)
    : n_(unknowns), track_(track_combinations) {}

void IncrementalEchelon::reduce(RowVectorQ& row, Rational& rhs,
                                std::map<std::size_t, Rational>* combo) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = row(pivots_[r]);
    if (f.is_zero()) continue;
    const RowVectorQ& basis = rows_[r];
    for (Eigen::Index c = 0; c < n_; ++c)
      if (!basis(c).is_zero()) row(c) -= f * basis(c);
    rhs -= f * rhs_[r];
    if (combo) {
      for (const auto& [src, w] : combos_[r]) {
        Rational& slot = (*combo)[src];
        slot -= f * w;
        if (slot.is_zero()) combo->erase(src);
      }
    }
  }
}

bool IncrementalEchelon::add_sparse(const std::map<Eigen::Index, Rational>& row, const Rational& rhs) {
  RowVectorQ dense = RowVectorQ::Constant(n_, Rational(0));
  for (const auto& [c, v] : row) dense(c) += v;
  return add(dense, rhs);
}

bool IncrementalEchelon::add(const RowVectorQ& input, const Rational& rhs_in) {
  std::size_t source = seen_++;
  if (conflict_) return false;
  RowVectorQ row = input;
  Rational rhs = rhs_in;
  std::map<std::size_t, Rational> combo;
  if (track_) combo.emplace(source, Rational(1));
  reduce(row, rhs, track_ ? &combo : nullptr);

  Eigen::Index pivot = -1;
  for (Eigen::Index c = 0; c < n_; ++c)
    if (!row(c).is_zero()) {
      pivot = c;
      break;
    }
  if (pivot < 0) {
    if (!rhs.is_zero()) {
      if (track_)
        for (auto& [src, w] : combo) w /= rhs;
      conflict_ = std::move(combo);
      return false;
    }
    return true;
  }

  const Rational inv = Rational(1) / row(pivot);
  for (Eigen::Index c = 0; c < n_; ++c)
    if (!row(c).is_zero()) row(c) *= inv;
  rhs *= inv;
  if (track_)
    for (auto& [src, w] : combo) w *= inv;

  // Keep the stored basis fully reduced in the new pivot column.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = rows_[r](pivot);
    if (f.is_zero()) continue;
    for (Eigen::Index c = 0; c < n_; ++c)
      if (!row(c).is_zero()) rows_[r](c) -= f * row(c);
    rhs_[r] -= f * rhs;
    if (track_) {
      for (const auto& [src, w] : combo) {
        Rational& slot = combos_[r][src];
        slot -= f * w;
        if (slot.is_zero()) combos_[r].erase(src);
      }
    }
  }

  pivot_row_.emplace(pivot, rows_.size());
  rows_.push_back(std::move(row));
  rhs_.push_back(rhs);
  pivots_.push_back(pivot);
  combos_.push_back(std::move(combo));
  sources_.push_back(source);
  return true;
}

std::vector<std::size_t> IncrementalEchelon::pivot_sources() const { return sources_; }

VectorQ IncrementalEchelon::particular_solution() const {
  VectorQ x = VectorQ::Constant(n_, Rational(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) x(pivots_[r]) = rhs_[r];
  return x;
}

MatrixQ IncrementalEchelon::nullspace() const {
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < n_; ++c)
    if (!pivot_row_.contains(c)) free.push_back(c);
  MatrixQ basis = MatrixQ::Constant(n_, static_cast<Eigen::Index>(free.size()), Rational(0));
  for (std::size_t f = 0; f < free.size(); ++f) {
    auto col = static_cast<Eigen::Index>(f);
    basis(free[f], col) = Rational(1);
    for (std::size_t r = 0; r < rows_.size(); ++r) basis(pivots_[r], col) = -rows_[r](free[f]);
  }
  return basis;
}

std::vector<bool> IncrementalEchelon::determined() const {
  std::vector<bool> out(static_cast<std::size_t>(n_), false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    bool touches_free = false;
    for (Eigen::Index c = 0; c < n_ && !touches_free; ++c)
      if (!pivot_row_.contains(c) && !rows_[r](c).is_zero()) touches_free = true;
    out[static_cast<std::size_t>(pivots_[r])] = !touches_free;
  }
  return out;
}

namespace {

bool subset_consistent(const MatrixQ& a, const VectorQ& b, const std::vector<Eigen::Index>& rows) {
  IncrementalEchelon e(a.cols());
  for (auto r : rows)
    if (!e.add(a.row(r), b(r))) return false;
  return true;
}

}  // namespace

std::vector<Eigen::Index> minimal_inconsistent_subset(const MatrixQ& a, const VectorQ& b) {
  IncrementalEchelon e(a.cols(), true);
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    if (!e.add(a.row(r), b(r))) break;
  if (e.consistent()) return {};
  std::vector<Eigen::Index> kept;
  for (const auto& [src, w] : *e.conflict()) kept.push_back(static_cast<Eigen::Index>(src));
  // Deletion filter: drop every equation whose removal keeps the conflict.
  for (std::size_t pos = 0; pos < kept.size();) {
    std::vector<Eigen::Index> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
    if (!subset_consistent(a, b, trial))
      kept = std::move(trial);
    else
      ++pos;
  }
  return kept;
}

}  // namespace zzg
