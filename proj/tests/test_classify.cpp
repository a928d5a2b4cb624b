#include <doctest.h>

#include "zzgraded/algebras.hpp"
#include "zzgraded/classify.hpp"

using namespace zzg;

namespace {

Rational q(std::string_view s) { return Rational::parse(s); }

ClassificationParams num(const Rational& a, const Rational& b1, const Rational& bm1) {
  return ClassificationParams::numeric(a, b1, bm1);
}

// Value of the relation's left side minus right side at c(i,j) = f(i,j).
template <class F>
Rational residual(const LinearRelation& r, F f) {
  Rational s = 0;
  for (const auto& [u, c] : r.coeffs) s += *c.constant_value() * f(u);
  return s - *r.rhs.constant_value();
}

CoeffSystem subset(const CoeffSystem& s, const std::vector<std::size_t>& rows) {
  CoeffSystem out = s;
  out.equations.clear();
  out.sources.clear();
  for (auto r : rows) {
    out.equations.push_back(s.equations[r]);
    out.sources.push_back(s.sources[r]);
  }
  return out;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("recurrence at the origin is trivial") {
    CHECK(recurrence_equation(num(1, 2, 3), 0, 0, 0).relation.trivial());
    CHECK(recurrence_equation(ClassificationParams::symbolic(), 0, 0, 0).relation.trivial());
  }

  TEST_CASE("constant solution when beta1 + betam1 = -1") {
    for (const auto& p : {num(q("2/3"), 2, -3), num(-5, q("1/2"), q("-3/2")), num(1, q("7/3"), q("-10/3"))}) {
      const Rational two_alpha = 2 * p.values()[0];
      for (std::int64_t i = -3; i <= 3; ++i)
        for (std::int64_t j = -3; j <= 3; ++j)
          for (std::int64_t k = -3; k <= 3; ++k) {
            const auto inst = recurrence_equation(p, i, j, k);
            if (inst.skipped) continue;
            CHECK(residual(inst.relation, [&](GradedIndex) { return two_alpha; }) == Rational(0));
          }
    }
  }

  TEST_CASE("(0,0,2k) instance after normalization") {
    const RingPtr ring = classification_ring();
    const auto p = ClassificationParams::symbolic();
    const MultiPoly a = MultiPoly::variable(ring, "alpha"), b1 = MultiPoly::variable(ring, "beta1"),
                    bm1 = MultiPoly::variable(ring, "betam1");
    for (std::int64_t k : {1, 2, -3}) {
      const LinearRelation r = normalize_origin(recurrence_equation(p, 0, 0, 2 * k).relation, a);
      REQUIRE(r.coeffs.size() == 2);
      CHECK(r.coeffs.at({2 * k, 0}) == -a + 2 * k * bm1);
      CHECK(r.coeffs.at({0, 2 * k}) == a + 2 * k * b1);
      CHECK(r.rhs == -4 * k * a);
    }
  }

  TEST_CASE("guard skips") {
    // beta1 = 1 and (j + alpha)(j + k + alpha) = 0
    CHECK(recurrence_equation(num(1, 1, -1), 2, -1, 1).skipped);
    // betam1 = 0 and (i - alpha)(i + k - alpha) = 0
    CHECK(recurrence_equation(num(1, 2, 0), 1, 0, 1).skipped);
    // the factor vanishes but beta_{-1} = -1 is not special
    CHECK_FALSE(recurrence_equation(num(1, 1, -1), 1, 0, 1).skipped);
    CHECK_FALSE(recurrence_equation(num(1, 2, -4), 2, -1, 1).skipped);
    CHECK_FALSE(recurrence_equation(ClassificationParams::symbolic(), 2, -1, 1).skipped);
    const CoeffSystem s = build_c_system(num(1, 1, -1), 3);
    CHECK(s.skipped == 59);
    CHECK_THROWS_AS(ClassificationParams::numeric(0, 1, 1), UsageError);
  }

  TEST_CASE("linear branch") {
    const WindowSolution s = solve_c_window(num(1, 2, -4), 5);
    REQUIRE(s.feasible);
    CHECK(s.unique);
    CHECK(s.values.size() == 121);
    for (const auto& [u, v] : s.values) CHECK(v == Rational(2 + 2 * u.i + 4 * u.j));
    for (const auto& [u, v] : s.values) CHECK(v == linear_branch_value(1, 3, u.i, u.j));
  }

  TEST_CASE("linear branch at other parameters") {
    for (const auto& [a, b1] : std::vector<std::pair<Rational, Rational>>{{q("2/3"), q("1/2")}, {-3, q("5/4")}}) {
      const WindowSolution s = solve_c_window(num(a, b1, -2 - b1), 3);
      REQUIRE(s.feasible);
      CHECK(s.unique);
      for (const auto& [u, v] : s.values) CHECK(v == linear_branch_value(a, b1 + 1, u.i, u.j));
    }
  }

  TEST_CASE("equal branch closed form") {
    CHECK(equal_branch_values(1, 2, 1).c_0_2k == std::optional(q("-4/23")));
    for (std::int64_t k = 1; k <= 3; ++k) {
      const Rational kk = k;
      const Rational expected = 2 * (-1 + 2 * kk) * (-1 + 3 * kk) / (1 - 24 * kk * kk);
      CHECK(equal_branch_values(1, 2, k).c_0_2k == std::optional(expected));
    }
    const WindowSolution sub = solve_system(build_c_subsystem(num(1, 2, 2), diagonal_instances(1)));
    REQUIRE(sub.feasible);
    CHECK(sub.values.at({0, 2}) == q("-4/23"));
    CHECK(sub.values.at({2, 0}) == *equal_branch_values(1, 2, 1).c_2k_0);
    // The full window at these parameters has no solution.
    CHECK_FALSE(solve_c_window(num(1, 2, 2), 5).feasible);

    for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{q("1/3"), -1}, {1, q("-1/2")}}) {
      const WindowSolution s = solve_c_window(num(a, b, b), 4);
      REQUIRE(s.feasible);
      for (std::int64_t k = 1; 2 * k <= 4; ++k) {
        // The closed form holds away from the zeros of its denominator.
        const DiagonalValues d = equal_branch_values(a, b, k);
        if (d.c_0_2k) CHECK(s.values.at({0, 2 * k}) == *d.c_0_2k);
        if (d.c_2k_0) CHECK(s.values.at({2 * k, 0}) == *d.c_2k_0);
      }
    }
  }

  TEST_CASE("opposite branch closed form") {
    const WindowSolution s = solve_c_window(num(q("1/2"), 1, -1), 4);
    REQUIRE(s.feasible);
    for (std::int64_t k = 1; 2 * k <= 4; ++k) {
      const DiagonalValues d = opposite_branch_values(q("1/2"), 1, k);
      CHECK(s.values.at({0, 2 * k}) == *d.c_0_2k);
      CHECK(s.values.at({2 * k, 0}) == *d.c_2k_0);
      CHECK(s.values.at({2 * k, 2 * k}) == *d.c_2k_2k);
    }
    CHECK(s.values.at({0, 2}) == q("1/5"));
    CHECK(s.values.at({2, 2}) == q("1/5"));
  }

  TEST_CASE("beta1 = betam1 = 1 is infeasible with a minimal certificate") {
    const auto p = num(1, 1, 1);
    const CoeffSystem sys = build_c_system(p, 5);
    const WindowSolution s = solve_system(sys);
    CHECK_FALSE(s.feasible);
    REQUIRE_FALSE(s.certificate.empty());
    CHECK(s.certificate.size() == s.certificate_text.size());
    CHECK_FALSE(solve_system(subset(sys, s.certificate)).feasible);
    for (std::size_t drop = 0; drop < s.certificate.size(); ++drop) {
      auto rows = s.certificate;
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(solve_system(subset(sys, rows)).feasible);
    }
  }

  TEST_CASE("integral alpha with special beta carries a note") {
    CHECK_FALSE(solve_c_window(num(1, 1, -1), 3).notes.empty());
    CHECK(solve_c_window(num(1, 2, -4), 3).notes.empty());
  }

  TEST_CASE("system bookkeeping") {
    const CoeffSystem s = build_c_system(num(1, 2, -4), 2);
    CHECK(s.unknowns.size() == 25);
    CHECK(s.sources.size() == s.equations.size());
    CHECK(s.sources.back() == "normalization");
    for (const auto& e : s.equations) {
      CHECK_FALSE(e.trivial());
      for (const auto& [u, c] : e.coeffs) CHECK((std::abs(u.i) <= 2 && std::abs(u.j) <= 2));
    }
  }

  TEST_CASE("constraint polynomials") {
    const ConstraintPolys c = derive_constraint_polys();
    CHECK(rational_multiple(c.p4, reference_p4()) == std::optional(Rational(-1)));
    CHECK(rational_multiple(c.p6, reference_p6()) == std::optional(Rational(-1)));
    CHECK(reference_p4().divide_exact(c.p4).has_value());
    CHECK(reference_p6().divide_exact(c.p6).has_value());
    const RingPtr ring = classification_ring();
    const MultiPoly a = MultiPoly::variable(ring, "alpha"), b1 = MultiPoly::variable(ring, "beta1"),
                    bm1 = MultiPoly::variable(ring, "betam1");
    CHECK(c.dk_leading == -a * b1 * b1 - 3 * a * b1);
    CHECK(c.p6.substitute("beta1", -bm1).is_zero());
    CHECK(rational_multiple(c.p4_mirror, reference_p4().substitute("beta1", bm1)).has_value());
    CHECK(c.dk == determinant_dk(MultiPoly::variable(ring, "k")));
    CHECK_FALSE(rational_multiple(c.p4, reference_p6()).has_value());
  }

  TEST_CASE("case split") {
    const CaseSplit s = enumerate_case_split();
    const std::vector<BetaRelation> expected{{-1, -2}, {-1, -1}, {-1, 0}, {1, 0}};
    CHECK(s.relations == expected);
    const std::set<std::pair<Rational, Rational>> exc(s.exceptional.begin(), s.exceptional.end());
    CHECK(exc == std::set<std::pair<Rational, Rational>>{{-3, 0}, {1, 0}, {0, -3}, {0, 1}});
    CHECK(exc.size() == s.exceptional.size());
    CHECK(BetaRelation{-1, -2}.str() == "beta1 = -betam1 - 2/1");
  }

  TEST_CASE("d' system has only the zero solution") {
    for (const Rational& a : {Rational(1), q("2/5")}) {
      const DPrimeCertificate c = dprime_impossibility(a, 3);
      CHECK(c.only_zero);
      CHECK(c.rank == c.unknowns);
      CHECK(c.pivot_rows.size() == c.rank);
    }
  }

  TEST_CASE("k-coefficient of the d' system") {
    const DPrimeCertificate c = dprime_impossibility(1, 3);
    REQUIRE_FALSE(c.k_relations.empty());
    for (const auto& r : c.k_relations) {
      CHECK(r.rhs.is_zero());
      if (r.coeffs.empty()) continue;
      REQUIRE(r.coeffs.size() == 2);
      const auto first = r.coeffs.begin()->second, second = std::next(r.coeffs.begin())->second;
      CHECK(first == -second);
      const auto [u, v] = std::pair(r.coeffs.begin()->first, std::next(r.coeffs.begin())->first);
      CHECK((u.i == 0 || v.i == 0));
      CHECK(u.i + u.j == v.i + v.j);
    }
  }

  TEST_CASE("D(1,3) brackets close the loop with the linear branch") {
    const auto d = AlgebraSpec<Rational>::d(1, 3);
    const WindowSolution s = solve_c_window(num(1, 2, -4), 5);
    REQUIRE(s.feasible);
    for (const auto& [u, v] : s.values) {
      const auto e = d.basis_bracket({u.i, -1}, {u.j, 1});
      CHECK(e.coefficient(BasisElement::L(u.i + u.j, 0)) == v);
    }
  }
}
