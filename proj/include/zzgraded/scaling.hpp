#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zzgraded/rational.hpp"

namespace zzg {

/// prod_u x_u^{exponents[u]} = ratio, with ratio != 0.
struct MonomialEquation {
  std::map<std::size_t, int> exponents;
  Rational ratio;
};

struct ScalingSolution {
  std::optional<std::vector<Rational>> values;  // nonzero when present
  std::string obstruction;                       // why no solution was found
};

/// Solves a system of monomial equations over the nonzero rationals.
///
/// Taking p-adic valuations turns the system into one rational linear
/// system per prime (exponents) plus one system over GF(2) (signs). Free
/// exponents are set to zero; the result is verified against every
/// equation before it is returned.
ScalingSolution solve_monomial_system(std::size_t unknowns, const std::vector<MonomialEquation>& equations);

/// Prime factorization of |n| > 0 by trial division.
std::map<mpz_class, int> factor_integer(mpz_class n);

}  // namespace zzg
