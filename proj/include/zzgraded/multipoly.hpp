#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zzgraded/rational.hpp"

namespace zzg {

/// Ordered list of symbol names. Polynomials over the same ring may be
/// combined; polynomials over different rings may not.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> symbols);

  static std::shared_ptr<const PolyRing> make(std::vector<std::string> symbols) {
    return std::make_shared<const PolyRing>(std::move(symbols));
  }

  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<std::string> symbols_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with Rational coefficients.
///
/// Terms are kept in a map keyed by exponent vectors, so equality is
/// structural. A polynomial without a ring is a constant and adopts the
/// ring of whatever it is combined with.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  MultiPoly(T c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(const RingPtr& ring, std::string_view name);
  static MultiPoly constant(const RingPtr& ring, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial, nullopt otherwise.
  std::optional<Rational> constant_value() const;
  /// Symbols with a nonzero exponent in some term, in ring order.
  std::vector<std::string> used_symbols() const;
  std::uint32_t degree_in(std::string_view symbol) const;
  std::uint32_t total_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly scale(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  MultiPoly operator-() const { return scale(Rational(-1)); }

  /// Structural equality; rings must be compatible.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Polynomial in the remaining symbols multiplying symbol^degree.
  MultiPoly coefficient_of(std::string_view symbol, std::uint32_t degree) const;
  /// Replaces every occurrence of symbol by value.
  MultiPoly substitute(std::string_view symbol, const MultiPoly& value) const;
  /// Exact evaluation; every used symbol must be assigned.
  Rational eval(const std::map<std::string, Rational>& assignment) const;
  /// Quotient when `divisor` divides this exactly, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  /// e.g. "3*alpha*i^2 + beta*i - 1"; "0" for the zero polynomial.
  std::string str() const;

 private:
  MultiPoly(RingPtr ring, std::map<Exponents, Rational> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  /// Common ring for a binary operation, or UsageError.
  static RingPtr unify(const RingPtr& a, const RingPtr& b);
  /// Copy of the terms keyed for `ring` (only valid from null or same ring).
  std::map<Exponents, Rational> rekeyed(const RingPtr& ring) const;
  std::size_t symbol_slot(std::string_view symbol) const;

  RingPtr ring_;
  std::map<Exponents, Rational> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Candidates at which a polynomial in at most one symbol vanishes.
std::set<Rational> rational_root_scan(const MultiPoly& p, const std::set<Rational>& candidates);

/// Integers and half-integers in [-bound, bound].
std::set<Rational> default_root_candidates(int bound = 4);

}  // namespace zzg
