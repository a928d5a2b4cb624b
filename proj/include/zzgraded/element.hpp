#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "zzgraded/multipoly.hpp"
#include "zzgraded/rational.hpp"

namespace zzg {

/// A point (i, j) of Z x Z; addition is the grading sum.
struct GradedIndex {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend GradedIndex operator+(GradedIndex a, GradedIndex b) { return {a.i + b.i, a.j + b.j}; }
  friend auto operator<=>(const GradedIndex&, const GradedIndex&) = default;
  friend std::ostream& operator<<(std::ostream& os, GradedIndex g) {
    return os << "(" << g.i << "," << g.j << ")";
  }
};

enum class BasisKind { L, C1, C2 };

/// L_{i,j} or one of the central generators c1, c2.
struct BasisElement {
  BasisKind kind = BasisKind::L;
  GradedIndex index{};  // meaningful for kind L only

  static BasisElement L(std::int64_t i, std::int64_t j) { return {BasisKind::L, {i, j}}; }
  static BasisElement L(GradedIndex g) { return {BasisKind::L, g}; }
  static BasisElement C1() { return {BasisKind::C1, {}}; }
  static BasisElement C2() { return {BasisKind::C2, {}}; }

  bool is_central() const { return kind != BasisKind::L; }
  std::string str() const;

  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

inline std::string BasisElement::str() const {
  switch (kind) {
    case BasisKind::C1: return "c1";
    case BasisKind::C2: return "c2";
    case BasisKind::L: break;
  }
  return "L(" + std::to_string(index.i) + "," + std::to_string(index.j) + ")";
}

inline std::string scalar_str(const Rational& r) { return r.str(); }
inline std::string scalar_str(const MultiPoly& p) { return p.str(); }

/// Finite linear combination of basis elements; zero coefficients are never stored.
template <class Scalar>
class Element {
 public:
  using scalar_type = Scalar;
  using Terms = std::map<BasisElement, Scalar>;

  Element() = default;
  Element(const BasisElement& b, const Scalar& c = Scalar(1)) { add_term(b, c); }  // NOLINT

  static Element basis(const BasisElement& b) { return Element(b); }

  void add_term(const BasisElement& b, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const BasisElement& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Element& operator+=(const Element& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  Element& operator*=(const Scalar& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  Element operator-() const {
    Element r;
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
  }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  /// "{}" for zero, otherwise "{L(3,0): 1/1, c1: 2/1}".
  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [b, c] : terms_) {
      if (!first) out += ", ";
      first = false;
      out += b.str() + ": " + scalar_str(c);
    }
    return out + "}";
  }

 private:
  Terms terms_;
};

}  // namespace zzg
