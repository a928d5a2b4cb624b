#include "zzgraded/serialize.hpp"

namespace zzg {

ordered_json to_json(const Rational& r) { return r.str(); }

ordered_json to_json(const MultiPoly& p) {
  ordered_json out;
  const auto& symbols = p.ring() ? p.ring()->symbols() : std::vector<std::string>{};
  out["symbols"] = symbols;
  ordered_json terms = ordered_json::array();
  for (const auto& [exps, c] : p.terms()) {
    ordered_json e = ordered_json::object();
    for (std::size_t s = 0; s < exps.size(); ++s)
      if (exps[s] != 0) e[symbols[s]] = exps[s];
    terms.push_back({{"exponents", e}, {"coeff", c.str()}});
  }
  out["terms"] = terms;
  out["text"] = p.str();
  return out;
}

ordered_json to_json(const BasisElement& b) {
  switch (b.kind) {
    case BasisKind::C1: return {{"kind", "C1"}};
    case BasisKind::C2: return {{"kind", "C2"}};
    case BasisKind::L: break;
  }
  return {{"kind", "L"}, {"i", b.index.i}, {"j", b.index.j}};
}

ordered_json to_json(GradedIndex g) { return ordered_json::array({g.i, g.j}); }

ordered_json to_json(const ViolationReport& r) {
  ordered_json w = ordered_json::array();
  for (const auto& x : r.witnesses) w.push_back({{"indices", x.indices}, {"offending", x.offending}});
  return {{"check", r.check}, {"checked_count", r.checked_count}, {"passed", r.passed()}, {"witnesses", w}};
}

ordered_json to_json(const std::map<std::int64_t, Rational>& c) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : c) out[std::to_string(k)] = v.str();
  return out;
}

ordered_json to_json(const ModVector& v) { return to_json(v.terms()); }

ordered_json to_json(const ModuleSpec& m) {
  ordered_json out{{"family", module_family_name(m.family)}, {"alpha", m.alpha.str()}};
  if (m.family == ModuleFamily::A_AB) out["beta"] = m.beta.str();
  out["omitted"] = m.omitted ? ordered_json(*m.omitted) : ordered_json(nullptr);
  return out;
}

ordered_json to_json(const Subquotient& s) {
  static const char* kinds[] = {"irreducible", "trivial-submodule", "complement-submodule"};
  return {{"kind", kinds[static_cast<int>(s.kind)]},
          {"k0", s.k0 ? ordered_json(*s.k0) : ordered_json(nullptr)},
          {"out_coefficient", s.out_coefficient.str()},
          {"in_coefficient", s.in_coefficient.str()},
          {"module", to_json(s.module)}};
}

ordered_json to_json(const IntertwinerResult& r) {
  return {{"found", r.witness.has_value()},
          {"witness", r.witness ? to_json(*r.witness) : ordered_json(nullptr)},
          {"nullity", r.nullity},
          {"equations", r.equations},
          {"forced_zero", r.forced_zero}};
}

ordered_json to_json(const IsomorphismResult& r) {
  ordered_json scaling = ordered_json::array();
  for (const auto& [e, l] : r.scaling) {
    auto img = r.images.find(e);
    scaling.push_back({{"basis", to_json(e)},
                       {"image", img != r.images.end() ? to_json(img->second) : ordered_json(nullptr)},
                       {"lambda", l.str()}});
  }
  return {{"found", r.found}, {"equations", r.equations}, {"obstruction", r.obstruction}, {"scaling", scaling}};
}

ordered_json to_json(const LinearRelation& r, const std::string& unknown) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& [u, c] : r.coeffs) coeffs.push_back({{"unknown", to_json(u)}, {"coeff", c.str()}});
  return {{"coeffs", coeffs}, {"rhs", r.rhs.str()}, {"text", r.str(unknown)}};
}

ordered_json to_json(const CoeffSystem& s) {
  ordered_json eqs = ordered_json::array();
  for (std::size_t e = 0; e < s.equations.size(); ++e) {
    ordered_json x = to_json(s.equations[e], s.unknown);
    x["source"] = s.sources[e];
    eqs.push_back(std::move(x));
  }
  ordered_json unknowns = ordered_json::array();
  for (auto u : s.unknowns) unknowns.push_back(to_json(u));
  return {{"unknown", s.unknown}, {"unknowns", unknowns}, {"skipped", s.skipped}, {"equations", eqs}};
}

ordered_json to_json(const WindowSolution& s) {
  ordered_json values = ordered_json::array();
  for (const auto& [u, v] : s.values) values.push_back({{"index", to_json(u)}, {"value", v.str()}});
  ordered_json undetermined = ordered_json::array();
  for (auto u : s.undetermined) undetermined.push_back(to_json(u));
  return {{"feasible", s.feasible},
          {"unique", s.unique},
          {"equations", s.equations},
          {"skipped", s.skipped},
          {"rank", s.rank},
          {"values", values},
          {"undetermined", undetermined},
          {"certificate", s.certificate_text},
          {"notes", s.notes}};
}

ordered_json to_json(const ConstraintPolys& c) {
  return {{"dk", to_json(c.dk)},
          {"p4", to_json(c.p4)},
          {"p6", to_json(c.p6)},
          {"p4_mirror", to_json(c.p4_mirror)},
          {"dk_leading", to_json(c.dk_leading)}};
}

ordered_json to_json(const CaseSplit& c) {
  ordered_json rel = ordered_json::array();
  for (const auto& r : c.relations)
    rel.push_back({{"slope", r.slope.str()}, {"offset", r.offset.str()}, {"text", r.str()}});
  ordered_json exc = ordered_json::array();
  for (const auto& [b1, bm1] : c.exceptional) exc.push_back({{"beta1", b1.str()}, {"betam1", bm1.str()}});
  return {{"relations", rel}, {"exceptional", exc}};
}

ordered_json to_json(const DPrimeCertificate& c) {
  ordered_json kr = ordered_json::array();
  for (const auto& r : c.k_relations) kr.push_back(r.str("d'"));
  return {{"unknowns", c.unknowns},   {"equations", c.equations}, {"rank", c.rank},
          {"only_zero", c.only_zero}, {"pivot_rows", c.pivot_rows}, {"k_relations", kr}};
}

namespace {

std::string leaf(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten_leaves(const ordered_json& v, const std::string& path,
                    std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, x] : v.items()) flatten_leaves(x, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array() && !v.empty()) {
    for (std::size_t n = 0; n < v.size(); ++n) flatten_leaves(v[n], path + "[" + std::to_string(n) + "]", out);
  } else {
    out.emplace_back(path.empty() ? "value" : path, leaf(v));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string to_text(const ordered_json& doc) {
  std::vector<std::pair<std::string, std::string>> leaves;
  flatten_leaves(doc, "", leaves);
  std::string out;
  for (const auto& [k, v] : leaves) out += k + ": " + v + "\n";
  return out;
}

std::string to_csv(const ordered_json& doc) {
  std::vector<std::pair<std::string, std::string>> leaves;
  flatten_leaves(doc, "", leaves);
  std::string out = "path,value\n";
  for (const auto& [k, v] : leaves) out += csv_field(k) + "," + csv_field(v) + "\n";
  return out;
}

}  // namespace zzg
