#include "zzgraded/scaling.hpp"

#include <set>

#include "zzgraded/echelon.hpp"

namespace zzg {

std::map<mpz_class, int> factor_integer(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0) throw UsageError("cannot factor zero");
  std::map<mpz_class, int> out;
  for (mpz_class p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

namespace {

int valuation(const Rational& r, const mpz_class& p) {
  int v = 0;
  mpz_class num = r.numerator(), den = r.denominator();
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

// Gaussian elimination over GF(2); returns a solution with free variables 0.
std::optional<std::vector<bool>> solve_gf2(std::size_t n, const std::vector<MonomialEquation>& eqs) {
  std::vector<std::vector<bool>> rows;
  std::vector<bool> rhs;
  for (const auto& e : eqs) {
    std::vector<bool> row(n, false);
    for (const auto& [u, x] : e.exponents) row[u] = (x % 2) != 0;
    rows.push_back(std::move(row));
    rhs.push_back(e.ratio.sign() < 0);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < n && lead < rows.size(); ++col) {
    std::size_t r = lead;
    while (r < rows.size() && !rows[r][col]) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[lead]);
    std::swap(rhs[r], rhs[lead]);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == lead || !rows[o][col]) continue;
      for (std::size_t c = 0; c < n; ++c) rows[o][c] = rows[o][c] != rows[lead][c];
      rhs[o] = rhs[o] != rhs[lead];
    }
    pivot_cols.push_back(col);
    ++lead;
  }
  for (std::size_t r = lead; r < rows.size(); ++r)
    if (rhs[r]) return std::nullopt;
  std::vector<bool> x(n, false);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = rhs[r];
  return x;
}

}  // namespace

ScalingSolution solve_monomial_system(std::size_t unknowns, const std::vector<MonomialEquation>& equations) {
  std::set<mpz_class> primes;
  for (const auto& e : equations) {
    if (e.ratio.is_zero()) return {std::nullopt, "zero ratio in monomial equation"};
    for (const auto& [p, k] : factor_integer(e.ratio.numerator())) primes.insert(p);
    for (const auto& [p, k] : factor_integer(e.ratio.denominator())) primes.insert(p);
  }

  std::vector<Rational> values(unknowns, Rational(1));
  const auto n = static_cast<Eigen::Index>(unknowns);
  for (const auto& p : primes) {
    IncrementalEchelon system(n);
    for (const auto& e : equations) {
      std::map<Eigen::Index, Rational> row;
      for (const auto& [u, x] : e.exponents) row[static_cast<Eigen::Index>(u)] += Rational(x);
      if (!system.add_sparse(row, Rational(valuation(e.ratio, p))))
        return {std::nullopt, "valuations at prime " + p.get_str() + " are inconsistent"};
    }
    VectorQ mu = system.particular_solution();
    for (std::size_t u = 0; u < unknowns; ++u) {
      const Rational& m = mu(static_cast<Eigen::Index>(u));
      if (!m.is_integer()) return {std::nullopt, "scaling needs a fractional power of " + p.get_str()};
      std::int64_t k = m.to_int64();
      Rational factor = zzg::pow(Rational(p, mpz_class(1)), static_cast<unsigned>(k < 0 ? -k : k));
      values[u] = k < 0 ? values[u] / factor : values[u] * factor;
    }
  }

  auto signs = solve_gf2(unknowns, equations);
  if (!signs) return {std::nullopt, "signs are inconsistent"};
  for (std::size_t u = 0; u < unknowns; ++u)
    if ((*signs)[u]) values[u] = -values[u];

  for (const auto& e : equations) {
    Rational lhs(1);
    for (const auto& [u, x] : e.exponents)
      lhs = x >= 0 ? lhs * zzg::pow(values[u], static_cast<unsigned>(x))
                   : lhs / zzg::pow(values[u], static_cast<unsigned>(-x));
    if (lhs != e.ratio) return {std::nullopt, "internal: verification of scaling failed"};
  }
  return {std::move(values), {}};
}

}  // namespace zzg
