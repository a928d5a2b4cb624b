#include "zzgraded/algebras.hpp"

#include <cassert>

namespace zzg {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Vir: return "vir";
    case Family::D: return "d";
    case Family::BlockExt: return "block";
    case Family::BPlusMinus1: return "bplus-";
    case Family::BPlusPlus1: return "bplus+";
    case Family::C: return "c";
    case Family::CBar: return "cbar";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Vir, Family::D, Family::BlockExt, Family::BPlusMinus1, Family::BPlusPlus1, Family::C,
                   Family::CBar})
    if (family_name(f) == name) return f;
  throw UsageError("unknown family '" + std::string(name) + "'");
}

bool has_central_extension(Family f) {
  return f == Family::BlockExt || f == Family::BPlusMinus1 || f == Family::BPlusPlus1;
}

namespace {

bool is_block_type(Family f) { return has_central_extension(f); }

std::optional<GradedIndex> integral_point(const Rational& x, const Rational& y) {
  if (!x.is_integer() || !y.is_integer()) return std::nullopt;
  return GradedIndex{x.to_int64(), y.to_int64()};
}

bool punctured(const StructureParams& p, GradedIndex g) {
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  return integral_point(-a, b) == g || integral_point(Rational(-2) * a, Rational(2) * b) == g;
}

// Rows of the C case table for the ordered region they are printed for;
// nullopt outside those regions.
std::optional<Rational> c_table_row(const Rational& alpha, GradedIndex a, GradedIndex b) {
  const std::int64_t i = a.i, j = a.j, k = b.i, l = b.j;
  auto generic = [&] { return Rational(k * (j + 1) - (l + 1) * i) + Rational(l - j) * alpha; };
  if (j >= -1 && l >= -1 && j + l >= -1) return generic();
  if (j >= 0 && l <= -2) return factorial_ratio(-l - 2, -l - j - 2) * generic();
  if (j == -1 && l == -1) return Rational(k - i);
  if (j == -1 && l <= -2) return -alpha + Rational(i);
  if (j <= -2 && l <= -2) return Rational(0);
  return std::nullopt;
}

}  // namespace

void validate(const StructureParams& p) {
  if (p.alpha.is_zero()) throw DomainError("alpha must be nonzero");
  switch (p.family) {
    case Family::BlockExt:
      if (p.beta.is_zero()) throw DomainError("block algebra requires alpha*beta != 0");
      break;
    case Family::BPlusMinus1:
      if (p.beta != Rational(-1)) throw DomainError("bplus- requires beta = -1");
      break;
    case Family::BPlusPlus1:
      if (p.beta != Rational(1)) throw DomainError("bplus+ requires beta = 1");
      break;
    default: break;
  }
}

bool in_domain(const StructureParams& p, GradedIndex g) {
  switch (p.family) {
    case Family::Vir:
    case Family::D:
    case Family::C:
    case Family::CBar: return true;
    case Family::BlockExt: return !punctured(p, g);
    case Family::BPlusMinus1: return g.j >= -1 && !punctured(p, g);
    case Family::BPlusPlus1: return g.j <= 1 && !punctured(p, g);
  }
  return false;
}

std::optional<GradedIndex> central_degree(const StructureParams& p, BasisKind kind) {
  if (!is_block_type(p.family)) return std::nullopt;
  if (kind == BasisKind::C1) return integral_point(-p.alpha, p.beta);
  if (kind == BasisKind::C2) return integral_point(Rational(-2) * p.alpha, Rational(2) * p.beta);
  return std::nullopt;
}

Rational factorial_ratio(std::int64_t i, std::int64_t j) {
  if (j < 0 || j > i) return Rational(0);
  mpz_class r = 1;
  for (std::int64_t t = j + 1; t <= i; ++t) r *= static_cast<long>(t);
  return Rational(r, mpz_class(1));
}

Rational c_family_coefficient(const Rational& alpha, GradedIndex a, GradedIndex b) {
  auto forward = c_table_row(alpha, a, b);
  auto backward = c_table_row(alpha, b, a);
  if (forward && backward) {
    assert(*forward == -*backward && "overlapping C table rows disagree");
    return *forward;
  }
  if (forward) return *forward;
  if (backward) return -*backward;
  assert(false && "C table does not cover this pair");
  return Rational(0);
}

LTerm l_bracket(const StructureParams& p, GradedIndex a, GradedIndex b) {
  const std::int64_t i = a.i, j = a.j, k = b.i, l = b.j;
  const Rational& alpha = p.alpha;
  const Rational& beta = p.beta;
  switch (p.family) {
    case Family::Vir: return {a + b, Rational(k - i) + Rational(l - j) * alpha};
    case Family::D: return {a + b, beta * Rational(i * l - j * k) + Rational(k - i) + Rational(l - j) * alpha};
    case Family::BlockExt:
    case Family::BPlusMinus1:
    case Family::BPlusPlus1:
      return {a + b, (Rational(i) + alpha) * (Rational(l) - beta) - (Rational(j) - beta) * (Rational(k) + alpha)};
    case Family::C: {
      GradedIndex target = p.literal_c_target ? GradedIndex{i + l, k + j} : a + b;
      return {target, c_family_coefficient(alpha, a, b)};
    }
    case Family::CBar: {
      GradedIndex ma{i, -j}, mb{k, -l};
      GradedIndex t = p.literal_c_target ? GradedIndex{ma.i + mb.j, mb.i + ma.j} : ma + mb;
      return {{t.i, -t.j}, c_family_coefficient(alpha, ma, mb)};
    }
  }
  return {a + b, Rational(0)};
}

CentralWeights central_weights(const StructureParams& p, GradedIndex a, GradedIndex b) {
  CentralWeights w;
  if (!is_block_type(p.family)) return w;
  const GradedIndex target = a + b;
  const Rational cocycle = p.alpha * Rational(a.j) + p.beta * Rational(a.i);
  if (central_degree(p, BasisKind::C1) == target) {
    w.c1 = true;
    w.w1 = cocycle;
  }
  if (central_degree(p, BasisKind::C2) == target) {
    w.c2 = true;
    w.w2 = cocycle;
    w.w2p = p.alpha + Rational(a.i);
  }
  return w;
}

std::vector<GradedIndex> window_indices(int window) {
  std::vector<GradedIndex> out;
  for (std::int64_t i = -window; i <= window; ++i)
    for (std::int64_t j = -window; j <= window; ++j) out.push_back({i, j});
  return out;
}

}  // namespace zzg
