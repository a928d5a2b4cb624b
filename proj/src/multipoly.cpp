#include "zzgraded/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace zzg {

PolyRing::PolyRing(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen(symbols_.begin(), symbols_.end());
  if (seen.size() != symbols_.size()) throw UsageError("duplicate symbol in polynomial ring");
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t s = 0; s < symbols_.size(); ++s)
    if (symbols_[s] == name) return s;
  return std::nullopt;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::string_view name) {
  auto slot = ring->index_of(name);
  if (!slot) throw UsageError("symbol '" + std::string(name) + "' not in ring");
  Exponents e(ring->size(), 0);
  e[*slot] = 1;
  return MultiPoly(ring, {{e, Rational(1)}});
}

MultiPoly MultiPoly::constant(const RingPtr& ring, const Rational& c) {
  std::map<Exponents, Rational> t;
  if (!c.is_zero()) t.emplace(Exponents(ring->size(), 0), c);
  return MultiPoly(ring, std::move(t));
}

RingPtr MultiPoly::unify(const RingPtr& a, const RingPtr& b) {
  if (!a) return b;
  if (!b || a == b || *a == *b) return a;
  throw UsageError("polynomials belong to different rings");
}

std::map<Exponents, Rational> MultiPoly::rekeyed(const RingPtr& ring) const {
  if (ring_ || !ring) return terms_;
  std::map<Exponents, Rational> out;
  for (const auto& [e, c] : terms_) out.emplace(Exponents(ring->size(), 0), c);
  return out;
}

std::size_t MultiPoly::symbol_slot(std::string_view symbol) const {
  if (!ring_) return static_cast<std::size_t>(-1);
  auto slot = ring_->index_of(symbol);
  return slot ? *slot : static_cast<std::size_t>(-1);
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::vector<std::string> MultiPoly::used_symbols() const {
  std::vector<std::string> out;
  if (!ring_) return out;
  for (std::size_t s = 0; s < ring_->size(); ++s)
    for (const auto& [e, c] : terms_)
      if (e[s] != 0) {
        out.push_back(ring_->symbols()[s]);
        break;
      }
  return out;
}

std::uint32_t MultiPoly::degree_in(std::string_view symbol) const {
  std::size_t slot = symbol_slot(symbol);
  if (slot == static_cast<std::size_t>(-1)) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[slot]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  RingPtr ring = unify(ring_, o.ring_);
  terms_ = rekeyed(ring);
  ring_ = ring;
  for (const auto& [e, c] : o.rekeyed(ring)) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  RingPtr ring = unify(ring_, o.ring_);
  auto lhs = rekeyed(ring);
  auto rhs = o.rekeyed(ring);
  std::map<Exponents, Rational> out;
  for (const auto& [e1, c1] : lhs)
    for (const auto& [e2, c2] : rhs) {
      Exponents e(e1.size());
      for (std::size_t s = 0; s < e.size(); ++s) e[s] = e1[s] + e2[s];
      auto [it, inserted] = out.try_emplace(std::move(e), c1 * c2);
      if (!inserted) it->second += c1 * c2;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  ring_ = ring;
  terms_ = std::move(out);
  return *this;
}

MultiPoly MultiPoly::scale(const Rational& c) const {
  if (c.is_zero()) return MultiPoly(ring_, {});
  MultiPoly r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = ring_ ? constant(ring_, Rational(1)) : MultiPoly(Rational(1));
  MultiPoly b = *this;
  while (e) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  RingPtr ring = MultiPoly::unify(a.ring_, b.ring_);
  return a.rekeyed(ring) == b.rekeyed(ring);
}

MultiPoly MultiPoly::coefficient_of(std::string_view symbol, std::uint32_t degree) const {
  std::size_t slot = symbol_slot(symbol);
  std::map<Exponents, Rational> out;
  for (const auto& [e, c] : terms_) {
    std::uint32_t d = slot == static_cast<std::size_t>(-1) ? 0 : e[slot];
    if (d != degree) continue;
    Exponents rest = e;
    if (slot != static_cast<std::size_t>(-1)) rest[slot] = 0;
    out.emplace(std::move(rest), c);
  }
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::substitute(std::string_view symbol, const MultiPoly& value) const {
  std::size_t slot = symbol_slot(symbol);
  if (slot == static_cast<std::size_t>(-1)) return *this;
  RingPtr ring = unify(ring_, value.ring_);
  MultiPoly v(ring, value.rekeyed(ring));
  std::vector<MultiPoly> powers{constant(ring, Rational(1))};
  MultiPoly out(ring, {});
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[slot]) powers.push_back(powers.back() * v);
    Exponents rest = e;
    rest[slot] = 0;
    out += MultiPoly(ring, {{rest, c}}) * powers[e[slot]];
  }
  return out;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& assignment) const {
  std::vector<Rational> values;
  if (ring_) {
    values.resize(ring_->size());
    for (std::size_t s = 0; s < ring_->size(); ++s) {
      auto it = assignment.find(ring_->symbols()[s]);
      if (it != assignment.end()) {
        values[s] = it->second;
        continue;
      }
      for (const auto& [e, c] : terms_)
        if (e[s] != 0) throw UsageError("no value for symbol '" + ring_->symbols()[s] + "'");
    }
  }
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t s = 0; s < e.size(); ++s)
      if (e[s]) t *= zzg::pow(values[s], e[s]);
    total += t;
  }
  return total;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  RingPtr ring = unify(ring_, divisor.ring_);
  MultiPoly rem(ring, rekeyed(ring));
  MultiPoly d(ring, divisor.rekeyed(ring));
  MultiPoly quotient(ring, {});
  // Lex-leading term is the largest key of the map.
  const auto& [lead_e, lead_c] = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    Exponents q(re.size());
    for (std::size_t s = 0; s < q.size(); ++s) {
      if (re[s] < lead_e[s]) return std::nullopt;
      q[s] = re[s] - lead_e[s];
    }
    MultiPoly qt(ring, {{q, rc / lead_c}});
    quotient += qt;
    rem -= qt * d;
  }
  return quotient;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = zzg::abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool monomial_is_one = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool need_star = false;
    if (mag != Rational(1) || monomial_is_one) {
      os << (mag.is_integer() ? mag.numerator().get_str() : mag.str());
      need_star = true;
    }
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (!e[s]) continue;
      if (need_star) os << "*";
      os << ring_->symbols()[s];
      if (e[s] > 1) os << "^" << e[s];
      need_star = true;
    }
  }
  return os.str();
}

std::set<Rational> rational_root_scan(const MultiPoly& p, const std::set<Rational>& candidates) {
  auto used = p.used_symbols();
  if (used.size() > 1) throw UsageError("rational_root_scan needs a univariate polynomial");
  std::set<Rational> roots;
  for (const auto& x : candidates) {
    std::map<std::string, Rational> a;
    if (!used.empty()) a.emplace(used.front(), x);
    if (p.eval(a).is_zero()) roots.insert(x);
  }
  return roots;
}

std::set<Rational> default_root_candidates(int bound) {
  std::set<Rational> out;
  for (int twice = -2 * bound; twice <= 2 * bound; ++twice) out.insert(Rational(mpz_class(twice), mpz_class(2)));
  return out;
}

}  // namespace zzg
