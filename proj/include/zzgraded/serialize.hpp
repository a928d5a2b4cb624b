#pragma once

// JSON / CSV / text renderings. Every rational is the string "p/q"; every
// map is emitted in its sorted order, so output is byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "zzgraded/algebras.hpp"
#include "zzgraded/classify.hpp"
#include "zzgraded/isomorphism.hpp"
#include "zzgraded/report.hpp"
#include "zzgraded/virmodules.hpp"

namespace zzg {

using nlohmann::ordered_json;

ordered_json to_json(const Rational& r);
/// {"symbols": [...], "terms": [{"exponents": {sym: e}, "coeff": "p/q"}]}, terms in sorted order.
ordered_json to_json(const MultiPoly& p);
ordered_json to_json(const BasisElement& b);
ordered_json to_json(GradedIndex g);

/// {"terms":[{"basis":{"kind":"L","i":..,"j":..}|{"kind":"C1"|"C2"},"coeff":"p/q"}]}
/// Polynomial coefficients are printed in their text form.
template <class Scalar>
ordered_json to_json(const Element<Scalar>& e) {
  ordered_json terms = ordered_json::array();
  for (const auto& [b, c] : e.terms()) terms.push_back({{"basis", to_json(b)}, {"coeff", scalar_str(c)}});
  return {{"terms", terms}};
}

template <class Scalar>
ordered_json to_json(const std::vector<TableRow<Scalar>>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows)
    out.push_back({{"left", to_json(r.left)}, {"right", to_json(r.right)}, {"result", to_json(r.result)["terms"]}});
  return out;
}

/// One line per term: left_i,left_j,right_i,right_j,kind,i,j,coeff; a zero
/// bracket is a row with empty term fields.
template <class Scalar>
std::string table_csv(const std::vector<TableRow<Scalar>>& rows) {
  std::string out = "left_i,left_j,right_i,right_j,kind,i,j,coeff\n";
  for (const auto& r : rows) {
    const std::string head = std::to_string(r.left.i) + "," + std::to_string(r.left.j) + "," +
                             std::to_string(r.right.i) + "," + std::to_string(r.right.j) + ",";
    if (r.result.zero()) out += head + ",,,\n";
    for (const auto& [b, c] : r.result.terms()) {
      const bool l = !b.is_central();
      out += head + (l ? "L" : b.kind == BasisKind::C1 ? "C1" : "C2") + "," + (l ? std::to_string(b.index.i) : "") +
             "," + (l ? std::to_string(b.index.j) : "") + "," + scalar_str(c) + "\n";
    }
  }
  return out;
}

ordered_json to_json(const ViolationReport& r);
ordered_json to_json(const ModVector& v);
ordered_json to_json(const std::map<std::int64_t, Rational>& c);
ordered_json to_json(const ModuleSpec& m);
ordered_json to_json(const Subquotient& s);
ordered_json to_json(const IntertwinerResult& r);
ordered_json to_json(const IsomorphismResult& r);
ordered_json to_json(const LinearRelation& r, const std::string& unknown = "c");
ordered_json to_json(const CoeffSystem& s);
ordered_json to_json(const WindowSolution& s);
ordered_json to_json(const ConstraintPolys& c);
ordered_json to_json(const CaseSplit& c);
ordered_json to_json(const DPrimeCertificate& c);

/// "path: value" per leaf, depth first in document order.
std::string to_text(const ordered_json& doc);
/// "path,value" per leaf with a header line; values are CSV-quoted when needed.
std::string to_csv(const ordered_json& doc);

}  // namespace zzg
