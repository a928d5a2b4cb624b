#include "zzgraded/virmodules.hpp"

#include <algorithm>
#include <cstdlib>

#include "zzgraded/echelon.hpp"

namespace zzg {

void ModVector::add_term(std::int64_t k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational ModVector::coefficient(std::int64_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

ModVector& ModVector::operator+=(const ModVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ModVector& ModVector::operator-=(const ModVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ModVector& ModVector::operator*=(const Rational& s) {
  if (s.is_zero()) terms_.clear();
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string ModVector::str() const {
  std::string out = "{";
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it != terms_.begin()) out += ", ";
    out += "v" + std::to_string(it->first) + ": " + it->second.str();
  }
  return out + "}";
}

std::string_view module_family_name(ModuleFamily f) {
  switch (f) {
    case ModuleFamily::A_AB: return "a";
    case ModuleFamily::A_Paren: return "a-paren";
    case ModuleFamily::B_Paren: return "b-paren";
  }
  return "?";
}

ModuleFamily parse_module_family(std::string_view name) {
  for (auto f : {ModuleFamily::A_AB, ModuleFamily::A_Paren, ModuleFamily::B_Paren})
    if (module_family_name(f) == name) return f;
  throw UsageError("unknown module family '" + std::string(name) + "' (expected a, a-paren, b-paren)");
}

ModVector ModuleSpec::act_basis(std::int64_t i, std::int64_t k) const {
  if (!contains(k)) throw UsageError("v" + std::to_string(k) + " is not in the module");
  const Rational ri(i), rk(k);
  std::int64_t target = i + k;
  Rational c;
  switch (family) {
    case ModuleFamily::A_AB:
      c = alpha + rk + beta * ri;
      break;
    case ModuleFamily::A_Paren:
      c = k != 0 ? Rational(i + k) : ri * (ri + alpha);
      break;
    case ModuleFamily::B_Paren:
      if (k != -i) {
        c = rk;
      } else {
        c = -ri * (ri + alpha);
        target = 0;
      }
      break;
  }
  if (!contains(target)) return {};
  return ModVector::basis(target, c);
}

std::string ModuleSpec::str() const {
  std::string s;
  switch (family) {
    case ModuleFamily::A_AB: s = "A_{" + alpha.str() + "," + beta.str() + "}"; break;
    case ModuleFamily::A_Paren: s = "A(" + alpha.str() + ")"; break;
    case ModuleFamily::B_Paren: s = "B(" + alpha.str() + ")"; break;
  }
  if (omitted) s += " without v" + std::to_string(*omitted);
  return s;
}

Subquotient irreducible_subquotient(const ModuleSpec& m) {
  if (m.family != ModuleFamily::A_AB) throw UsageError("subquotients are defined for A_{alpha,beta} only");
  Subquotient out;
  out.module = m;
  out.module.omitted.reset();

  // Only k0 = -alpha can make either coefficient vanish identically in i.
  const Rational k0 = -m.alpha;
  if (!k0.is_integer()) return out;
  const std::int64_t k = k0.to_int64();

  RingPtr ring = PolyRing::make({"i"});
  const MultiPoly i = MultiPoly::variable(ring, "i");
  out.out_coefficient = MultiPoly::constant(ring, m.alpha + k0) + m.beta * i;      // L_i v_k0
  out.in_coefficient = MultiPoly::constant(ring, m.alpha + k0) + (m.beta - 1) * i;  // L_i v_{k0-i}
  if (out.out_coefficient.is_zero())
    out.kind = SubquotientKind::TrivialSubmodule;
  else if (out.in_coefficient.is_zero())
    out.kind = SubquotientKind::Complement;
  else
    return out;
  out.k0 = k;
  out.module.omitted = k;
  return out;
}

IntertwinerResult find_intertwiner(const ModuleSpec& m1, const ModuleSpec& m2, int window) {
  if (window < 0) throw UsageError("window must be non-negative");
  std::vector<std::int64_t> ks;
  for (std::int64_t k = -window; k <= window; ++k)
    if (m1.contains(k) && m2.contains(k)) ks.push_back(k);
  std::map<std::int64_t, Eigen::Index> col;
  for (auto k : ks) col.emplace(k, static_cast<Eigen::Index>(col.size()));

  IntertwinerResult out;
  if (ks.empty()) return out;
  IncrementalEchelon system(static_cast<Eigen::Index>(ks.size()));
  for (std::int64_t i = -window; i <= window; ++i)
    for (auto k : ks) {
      // phi(L_i v_k) = L_i phi(v_k), compared at every v_t inside the window
      const ModVector a1 = m1.act_basis(i, k), a2 = m2.act_basis(i, k);
      std::map<std::int64_t, int> targets;
      for (const auto& [t, c] : a1.terms()) targets[t];
      for (const auto& [t, c] : a2.terms()) targets[t];
      for (const auto& [t, unused] : targets) {
        auto ct = col.find(t);
        if (ct == col.end()) continue;
        std::map<Eigen::Index, Rational> row;
        row[ct->second] += a1.coefficient(t);
        row[col.at(k)] -= a2.coefficient(t);
        ++out.equations;
        system.add_sparse(row, 0);
      }
    }

  const MatrixQ basis = system.nullspace();
  out.nullity = static_cast<std::size_t>(basis.cols());
  for (Eigen::Index r = 0; r < basis.rows(); ++r) {
    bool all_zero = true;
    for (Eigen::Index c = 0; c < basis.cols(); ++c) all_zero = all_zero && basis(r, c).is_zero();
    if (all_zero) out.forced_zero.push_back(ks[static_cast<std::size_t>(r)]);
  }
  if (out.nullity == 0 || !out.forced_zero.empty()) return out;

  // Combinations sum_r t^r b_r: every coordinate is a nonzero polynomial in t
  // of degree < nullity, so some t among the first rows * nullity + 1 works.
  VectorQ v;
  const auto tries = basis.rows() * basis.cols() + 1;
  for (Eigen::Index t = 1; t <= tries; ++t) {
    v = VectorQ::Zero(basis.rows());
    Rational w(1);
    for (Eigen::Index c = 0; c < basis.cols(); ++c, w *= Rational(t)) v += w * basis.col(c);
    if (std::none_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); })) break;
  }
  if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); })) return out;

  auto pivot = std::min_element(ks.begin(), ks.end(), [](std::int64_t a, std::int64_t b) {
    return std::make_pair(std::llabs(a), a < 0) < std::make_pair(std::llabs(b), b < 0);
  });
  const Rational scale = v(col.at(*pivot));
  std::map<std::int64_t, Rational> c;
  for (auto k : ks) c.emplace(k, v(col.at(k)) / scale);
  out.witness = std::move(c);
  return out;
}

ViolationReport check_intertwiner(const ModuleSpec& m1, const ModuleSpec& m2,
                                  const std::map<std::int64_t, Rational>& c, int window) {
  ViolationReport r{"intertwiner", {}, 0};
  for (std::int64_t i = -window; i <= window; ++i)
    for (const auto& [k, ck] : c) {
      // c_{t} (L_i v_k)_1 against c_k (L_i v_k)_2, at each v_t inside the window
      const ModVector a1 = m1.act_basis(i, k), a2 = m2.act_basis(i, k);
      ModVector d;
      for (const auto& [t, ct] : c) d.add_term(t, ct * a1.coefficient(t) - ck * a2.coefficient(t));
      ++r.checked_count;
      if (!d.zero()) r.witnesses.push_back({{i, k}, d.str()});
    }
  return r;
}

}  // namespace zzg
