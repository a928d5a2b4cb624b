// zzgraded: brackets, structure tables, verification sweeps, modules and the
// classification computations from the command line.
//
// Exit codes: 0 success, 1 violation / unexpected infeasibility, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "zzgraded/classify.hpp"
#include "zzgraded/isomorphism.hpp"
#include "zzgraded/serialize.hpp"
#include "zzgraded/symbolic.hpp"
#include "zzgraded/verify.hpp"
#include "zzgraded/virmodules.hpp"

using namespace zzg;

namespace {

struct Options {
  std::string family = "vir";
  std::string alpha = "1", beta = "0";
  std::string a1 = "0", a2 = "0", a2p = "0";
  std::string beta1 = "0", betam1 = "0";
  std::string left = "0,0", right = "0,0";
  int window = 2;
  std::string format = "text";
  std::string out;
  bool literal_c_target = false;
  // module
  std::string family2, alpha2, beta2;
  bool prime = false, prime2 = false;
  // classify
  std::string ijk = "0,0,0";
  int subsystem = 0;
  bool expect_infeasible = false;
  // positional operation for verify / module / classify
  std::string op;
};

struct Output {
  std::string body;
  int code = 0;
};

std::vector<std::int64_t> parse_ints(const std::string& s, std::size_t n, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw UsageError(std::string("malformed ") + what + " '" + s + "'");
    out.push_back(v);
  }
  if (out.size() != n) throw UsageError(std::string("malformed ") + what + " '" + s + "'");
  return out;
}

GradedIndex parse_index(const std::string& s) {
  auto v = parse_ints(s, 2, "index");
  return {v[0], v[1]};
}

bool is_sym(const std::string& s) { return s == "sym"; }

std::string render(const ordered_json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "csv") return to_csv(doc);
  return to_text(doc);
}

StructureParams structure(const Options& o) {
  StructureParams p;
  p.family = parse_family(o.family);
  p.alpha = Rational::parse(o.alpha);
  p.beta = Rational::parse(o.beta);
  if (p.family == Family::BPlusMinus1) p.beta = -1;
  if (p.family == Family::BPlusPlus1) p.beta = 1;
  p.literal_c_target = o.literal_c_target;
  return p;
}

bool symbolic_centers(const Options& o) { return is_sym(o.a1) || is_sym(o.a2) || is_sym(o.a2p); }

AlgebraSpec<MultiPoly> symbolic_spec(const Options& o) {
  const RingPtr ring = PolyRing::make({"a1", "a2", "a2p"});
  auto param = [&](const std::string& v, const char* name) {
    return is_sym(v) ? MultiPoly::variable(ring, name) : MultiPoly::constant(ring, Rational::parse(v));
  };
  return AlgebraSpec<MultiPoly>::make(structure(o), param(o.a1, "a1"), param(o.a2, "a2"), param(o.a2p, "a2p"));
}

AlgebraSpec<Rational> rational_spec(const Options& o) {
  return AlgebraSpec<Rational>::make(structure(o), Rational::parse(o.a1), Rational::parse(o.a2),
                                     Rational::parse(o.a2p));
}

template <class F>
Output with_spec(const Options& o, F&& f) {
  return symbolic_centers(o) ? f(symbolic_spec(o)) : f(rational_spec(o));
}

Output run_bracket(const Options& o) {
  return with_spec(o, [&](const auto& spec) {
    const auto e = basis_bracket(spec, parse_index(o.left), parse_index(o.right));
    if (o.format == "text") return Output{e.str() + "\n", 0};
    if (o.format == "json") return Output{to_json(e).dump(2) + "\n", 0};
    std::string csv = "kind,i,j,coeff\n";
    for (const auto& [b, c] : e.terms()) {
      const auto j = to_json(b);
      csv += j["kind"].template get<std::string>() + "," + (b.is_central() ? "," : std::to_string(b.index.i) + "," +
                                                                                     std::to_string(b.index.j)) +
             "," + scalar_str(c) + "\n";
    }
    return Output{csv, 0};
  });
}

Output run_table(const Options& o) {
  return with_spec(o, [&](const auto& spec) {
    const auto rows = structure_table(spec, o.window);
    if (o.format == "json") return Output{to_json(rows).dump(2) + "\n", 0};
    if (o.format == "csv") return Output{table_csv(rows), 0};
    std::string text;
    for (const auto& r : rows) {
      std::ostringstream line;
      line << r.left << " " << r.right << " -> " << r.result.str() << "\n";
      text += line.str();
    }
    return Output{text, 0};
  });
}

Output report_output(const ViolationReport& r, const Options& o) {
  return {render(to_json(r), o.format), r.passed() ? 0 : 1};
}

Output run_verify(const Options& o) {
  if (o.window < 0) throw UsageError("window must be non-negative");
  if (o.op == "symbolic") {
    const Family f = parse_family(o.family);
    const RingPtr ring = jacobi_ring();
    StructureFormula formula;
    switch (f) {
      case Family::D: formula = d_formula(ring); break;
      case Family::Vir: formula = vir_formula(ring); break;
      case Family::BlockExt: formula = block_formula(ring); break;
      default: throw UsageError("symbolic Jacobi is available for d, vir and block");
    }
    const MultiPoly sum = cyclic_jacobi_sum(formula);
    ordered_json doc{{"check", "symbolic-jacobi"}, {"family", family_name(f)}, {"passed", sum.is_zero()},
                     {"residual", sum.str()}};
    return {render(doc, o.format), sum.is_zero() ? 0 : 1};
  }
  if (o.op == "quotient") {
    // C(alpha) / C^- against B+(-alpha, -1; 1, 0, 0); the missing L of B+ at
    // (alpha, -1) is matched with c1 when that index is integral.
    const Rational alpha = Rational::parse(o.alpha);
    const HalfPlaneQuotient quotient(AlgebraSpec<Rational>::c(alpha), -1);
    const auto target = AlgebraSpec<Rational>::bplus(-1, -alpha, 1, 0, 0);
    std::optional<GradedIndex> puncture;
    if (alpha.is_integer()) puncture = GradedIndex{alpha.to_int64(), -1};
    BasisMap sigma = [puncture](const BasisElement& e) -> std::optional<BasisElement> {
      if (!e.is_central() && puncture && e.index == *puncture) return BasisElement::C1();
      return e;
    };
    const IsomorphismResult r = find_diagonal_isomorphism(quotient, target, sigma, o.window);
    return {render(to_json(r), o.format), r.found ? 0 : 1};
  }
  return with_spec(o, [&](const auto& spec) {
    if (o.op == "jacobi") return report_output(check_jacobi(spec, o.window), o);
    if (o.op == "antisymmetry") return report_output(check_antisymmetry(spec, o.window), o);
    if (o.op == "grading") return report_output(check_grading(spec, o.window), o);
    throw UsageError("unknown check '" + o.op + "' (jacobi, antisymmetry, grading, symbolic, quotient)");
  });
}

ModuleSpec module_spec(const std::string& family, const std::string& alpha, const std::string& beta, bool prime) {
  ModuleSpec m{parse_module_family(family), Rational::parse(alpha), Rational::parse(beta), {}};
  if (prime) m = irreducible_subquotient(m).module;
  return m;
}

Output run_module(const Options& o) {
  const std::string family = o.family == "vir" ? "a" : o.family;
  const ModuleSpec m = module_spec(family, o.alpha, o.beta, o.prime);
  if (o.op == "axiom") return report_output(check_module_axiom(m, o.window), o);
  if (o.op == "subquotient") return {render(to_json(irreducible_subquotient(m)), o.format), 0};
  if (o.op == "act") {
    const auto v = parse_ints(o.left, 2, "generator,vector pair");
    const ModVector r = act(m, v[0], ModVector::basis(v[1]));
    ordered_json doc{{"module", to_json(m)}, {"generator", v[0]}, {"vector", v[1]}, {"result", to_json(r)}};
    return {render(doc, o.format), 0};
  }
  if (o.op == "intertwine") {
    const ModuleSpec m2 = module_spec(o.family2.empty() ? family : o.family2, o.alpha2.empty() ? o.alpha : o.alpha2,
                                      o.beta2.empty() ? o.beta : o.beta2, o.prime2);
    const IntertwinerResult r = find_intertwiner(m, m2, o.window);
    ordered_json doc{{"source", to_json(m)}, {"target", to_json(m2)}, {"result", to_json(r)}};
    return {render(doc, o.format), r.witness ? 0 : 1};
  }
  throw UsageError("unknown module operation '" + o.op + "' (axiom, subquotient, act, intertwine)");
}

MultiPoly classification_param(const std::string& v, const char* name) {
  return is_sym(v) ? MultiPoly::variable(classification_ring(), name)
                   : MultiPoly::constant(classification_ring(), Rational::parse(v));
}

Output run_classify(const Options& o) {
  if (o.op == "constraints") {
    const ConstraintPolys polys = derive_constraint_polys();
    ordered_json doc = to_json(polys);
    doc["p4_scale_to_reference"] = rational_multiple(polys.p4, reference_p4()).value_or(Rational(0)).str();
    doc["p6_scale_to_reference"] = rational_multiple(polys.p6, reference_p6()).value_or(Rational(0)).str();
    doc["p4_reference"] = reference_p4().str();
    doc["p6_reference"] = reference_p6().str();
    doc["case_split"] = to_json(enumerate_case_split());
    return {render(doc, o.format), 0};
  }
  if (o.op == "impossibility") {
    if (o.window < 2) throw UsageError("window must be at least 2");
    const DPrimeCertificate c = dprime_impossibility(Rational::parse(o.alpha), o.window);
    return {render(to_json(c), o.format), c.only_zero ? 0 : 1};
  }
  ClassificationParams p{classification_param(o.alpha, "alpha"), classification_param(o.beta1, "beta1"),
                         classification_param(o.betam1, "betam1")};
  if (p.is_numeric() && p.alpha.is_zero()) throw UsageError("alpha must be nonzero");
  if (o.op == "recurrence") {
    const auto v = parse_ints(o.ijk, 3, "i,j,k triple");
    const RecurrenceInstance r = recurrence_equation(p, v[0], v[1], v[2]);
    ordered_json doc{{"ijk", v}, {"skipped", r.skipped}, {"relation", to_json(r.relation)}};
    return {render(doc, o.format), 0};
  }
  if (o.op == "solve") {
    if (!p.is_numeric()) throw UsageError("solve needs numeric alpha, beta1, betam1");
    if (o.window < 2 && o.subsystem == 0) throw UsageError("window must be at least 2");
    WindowSolution s;
    if (o.subsystem != 0)
      s = solve_system(build_c_subsystem(p, diagonal_instances(o.subsystem)));
    else
      s = solve_c_window(p, o.window);
    const int code = o.expect_infeasible ? (s.feasible ? 1 : 0) : (s.feasible ? 0 : 1);
    return {render(to_json(s), o.format), code};
  }
  throw UsageError("unknown classify operation '" + o.op + "' (solve, recurrence, constraints, impossibility)");
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--family", o.family, "vir, d, block, bplus-, bplus+, c, cbar (modules: a, a-paren, b-paren)");
  app->add_option("--alpha", o.alpha, "rational p/q, or sym where supported");
  app->add_option("--beta", o.beta);
  app->add_option("--a1", o.a1, "central parameter, rational or sym");
  app->add_option("--a2", o.a2);
  app->add_option("--a2p", o.a2p);
  app->add_option("--beta1", o.beta1);
  app->add_option("--betam1", o.betam1);
  app->add_option("--left", o.left, "index i,j");
  app->add_option("--right", o.right, "index i,j");
  app->add_option("--window", o.window, "W: |i|,|j| <= W");
  app->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--out", o.out, "write output to FILE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Z x Z-graded Lie algebras"};
  app.require_subcommand(1);
  Options o;

  auto* bracket = app.add_subcommand("bracket", "evaluate [L_left, L_right]");
  add_common(bracket, o);
  bracket->add_flag("--literal-c-target", o.literal_c_target, "diagnostic: literal target index for c / cbar");

  auto* table = app.add_subcommand("table", "all basis brackets over a window");
  add_common(table, o);
  table->add_flag("--literal-c-target", o.literal_c_target);

  auto* verify = app.add_subcommand("verify", "jacobi | antisymmetry | grading | symbolic | quotient");
  add_common(verify, o);
  verify->add_option("check", o.op)->required();
  verify->add_flag("--literal-c-target", o.literal_c_target);

  auto* module = app.add_subcommand("module", "axiom | subquotient | act | intertwine");
  add_common(module, o);
  module->add_option("op", o.op)->required();
  module->add_flag("--prime", o.prime, "use the irreducible subquotient");
  module->add_option("--family2", o.family2);
  module->add_option("--alpha2", o.alpha2);
  module->add_option("--beta2", o.beta2);
  module->add_flag("--prime2", o.prime2);

  auto* classify = app.add_subcommand("classify", "solve | recurrence | constraints | impossibility");
  add_common(classify, o);
  classify->add_option("op", o.op)->required();
  classify->add_option("--ijk", o.ijk, "i,j,k for recurrence");
  classify->add_option("--subsystem", o.subsystem, "solve only the diagonal instances at this k");
  classify->add_flag("--expect-infeasible", o.expect_infeasible);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  Output result;
  try {
    if (*bracket) result = run_bracket(o);
    if (*table) result = run_table(o);
    if (*verify) result = run_verify(o);
    if (*module) result = run_module(o);
    if (*classify) result = run_classify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DivisionByZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    std::cout << result.body;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << result.body;
  }
  return result.code;
}
