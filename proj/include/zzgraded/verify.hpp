#pragma once

// Windowed exact checks of the Lie axioms and the grading.
//
// Inputs range over the window |i|, |j| <= W intersected with the index set
// of the model; bracket results are evaluated wherever they land. Sweeps are
// split over worker threads by the first index and merged in sweep order, so
// reports are deterministic.

#include <algorithm>
#include <functional>
#include <map>
#include <thread>
#include <vector>

#include "zzgraded/algebras.hpp"
#include "zzgraded/report.hpp"

namespace zzg {

namespace detail {

template <class Fn>
ViolationReport partitioned_sweep(std::string name, std::size_t outer, Fn&& body) {
  std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), outer));
  std::vector<ViolationReport> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t o = w * outer / workers; o < (w + 1) * outer / workers; ++o) body(o, parts[w]);
      });
  }
  ViolationReport out{std::move(name), {}, 0};
  for (const auto& p : parts) out.merge(p);
  return out;
}

template <LieModel M>
std::vector<GradedIndex> domain_window(const M& m, int window) {
  std::vector<GradedIndex> idx;
  for (auto g : window_indices(window))
    if (m.contains(g)) idx.push_back(g);
  return idx;
}

}  // namespace detail

/// Witnesses every ordered pair with [a,b] != -[b,a].
template <LieModel M>
ViolationReport check_antisymmetry(const M& m, int window) {
  const auto idx = detail::domain_window(m, window);
  return detail::partitioned_sweep("antisymmetry", idx.size(), [&](std::size_t o, ViolationReport& r) {
    const GradedIndex a = idx[o];
    for (auto b : idx) {
      ++r.checked_count;
      auto sum = m.basis_bracket(a, b) + m.basis_bracket(b, a);
      if (!sum.zero()) r.witnesses.push_back({flatten({a, b}), sum.str()});
    }
  });
}

/// Witnesses every triple whose cyclic sum [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
/// is nonzero. With symbolic central parameters each sum must vanish as a
/// polynomial.
template <LieModel M>
ViolationReport check_jacobi(const M& m, int window) {
  using Scalar = typename M::scalar_type;
  const auto idx = detail::domain_window(m, window);
  const std::size_t n = idx.size();
  std::vector<Element<Scalar>> inner(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) inner[p * n + q] = m.basis_bracket(idx[p], idx[q]);

  auto outer_bracket = [&](GradedIndex x, const Element<Scalar>& y) {
    Element<Scalar> out;
    for (const auto& [b, c] : y.terms()) {
      if (b.is_central()) continue;
      Element<Scalar> t = m.basis_bracket(x, b.index);
      t *= c;
      out += t;
    }
    return out;
  };

  return detail::partitioned_sweep("jacobi", n, [&](std::size_t p, ViolationReport& r) {
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s) {
        ++r.checked_count;
        Element<Scalar> sum = outer_bracket(idx[p], inner[q * n + s]);
        sum += outer_bracket(idx[q], inner[s * n + p]);
        sum += outer_bracket(idx[s], inner[p * n + q]);
        if (!sum.zero()) r.witnesses.push_back({flatten({idx[p], idx[q], idx[s]}), sum.str()});
      }
  });
}

/// Every L-term of [a,b] must sit at a+b; c1 / c2 terms may only appear
/// when a+b is the degree of that generator.
template <LieModel M>
ViolationReport check_grading(const M& m, int window) {
  const auto idx = detail::domain_window(m, window);
  return detail::partitioned_sweep("grading", idx.size(), [&](std::size_t o, ViolationReport& r) {
    const GradedIndex a = idx[o];
    for (auto b : idx) {
      ++r.checked_count;
      const auto result = m.basis_bracket(a, b);
      Element<typename M::scalar_type> bad;
      for (const auto& [e, c] : result.terms()) {
        auto deg = e.is_central() ? m.degree_of(e) : std::optional(e.index);
        if (deg != a + b) bad.add_term(e, c);
      }
      if (!bad.zero()) r.witnesses.push_back({flatten({a, b}), bad.str()});
    }
  });
}

}  // namespace zzg
