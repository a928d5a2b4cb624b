#include <doctest.h>

#include "zzgraded/algebras.hpp"

using namespace zzg;

namespace {

using Spec = AlgebraSpec<Rational>;
using E = Element<Rational>;

Rational q(std::string_view s) { return Rational::parse(s); }
E l(std::int64_t i, std::int64_t j, const Rational& c = 1) { return E(BasisElement::L(i, j), c); }

}  // namespace

TEST_SUITE("algebras") {
  TEST_CASE("in_domain examples") {
    CHECK_FALSE(in_domain(Spec::block(1, 2), {-1, 2}));
    CHECK_FALSE(in_domain(Spec::block(1, 2), {-2, 4}));
    CHECK(in_domain(Spec::block(1, 2), {0, 0}));
    CHECK_FALSE(in_domain(Spec::block(q("1/2"), 2), {-1, 4}));
    CHECK(in_domain(Spec::block(q("1/2"), 2), {0, 0}));
    CHECK_FALSE(in_domain(Spec::bplus(-1, 1), {0, -2}));
    CHECK(in_domain(Spec::bplus(-1, 1), {0, -1}));
    CHECK_FALSE(in_domain(Spec::bplus(1, 1), {0, 2}));
    CHECK(in_domain(Spec::vir(1), {-100, 100}));
    CHECK(in_domain(Spec::c(1), {5, -9}));
    CHECK(in_domain(Spec::cbar(1), {5, 9}));
  }

  TEST_CASE("B+ keeps the Block punctures inside its half-plane") {
    CHECK_FALSE(in_domain(Spec::bplus(-1, 1), {-1, -1}));
    CHECK_FALSE(in_domain(Spec::bplus(1, 1), {-1, 1}));
  }

  TEST_CASE("bracket examples") {
    CHECK(Spec::vir(1).basis_bracket({1, 0}, {0, 1}).zero());

    const auto block = Spec::block(1, 2, 1);
    CHECK(block.basis_bracket({0, 1}, {-1, 1}) == E(BasisElement::C1(), 1));

    CHECK(Spec::c(q("2/3")).basis_bracket({0, -1}, {1, -1}) == l(1, -2));
    CHECK(Spec::c(7).basis_bracket({0, -1}, {1, -1}) == l(1, -2));

    const auto c1 = Spec::c(1);
    for (std::int64_t m = -3; m <= 3; ++m) {
      CAPTURE(m);
      CHECK(c1.basis_bracket({0, 1}, {m, -4}) == l(m, -3, Rational(2 * (2 * m - 5))));
    }
  }

  TEST_CASE("C rows with both j <= -2 vanish") {
    const auto c = Spec::c(q("2/3"));
    CHECK(c.basis_bracket({1, -2}, {3, -5}).zero());
    CHECK(c.basis_bracket({-2, -3}, {0, -2}).zero());
  }

  TEST_CASE("C case table is antisymmetric") {
    const Rational a = q("2/3");
    for (std::int64_t i = -2; i <= 2; ++i)
      for (std::int64_t j = -3; j <= 3; ++j)
        for (std::int64_t k = -2; k <= 2; ++k)
          for (std::int64_t m = -3; m <= 3; ++m)
            CHECK(c_family_coefficient(a, {i, j}, {k, m}) == -c_family_coefficient(a, {k, m}, {i, j}));
  }

  TEST_CASE("bilinear bracket") {
    const auto v = Spec::vir(2);
    CHECK(bracket(v, E(), l(1, 0)).zero());
    CHECK(bracket(v, l(3, -1), l(3, -1)).zero());
    CHECK(bracket(v, l(1, 0) + l(0, 1), l(2, 0)) == l(3, 0));
    CHECK(bracket(v, l(1, 0, 2), l(2, 0, 3)) == 6 * v.basis_bracket({1, 0}, {2, 0}));
    const auto block = Spec::block(1, 2, 1);
    CHECK(bracket(block, E(BasisElement::C1()), l(2, 0)).zero());
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(Spec::block(1, 2).basis_bracket({-1, 2}, {0, 0}), DomainError);
    CHECK_THROWS_AS(Spec::bplus(-1, 1).basis_bracket({0, -2}, {0, 0}), DomainError);
    CHECK_THROWS_AS(bracket(Spec::block(1, 2), l(-1, 2), l(0, 0)), DomainError);
    CHECK_THROWS_AS(bracket(Spec::vir(1), E(BasisElement::C1()), l(0, 0)), DomainError);
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Spec::vir(0), DomainError);
    CHECK_THROWS_AS(Spec::c(0), DomainError);
    CHECK_THROWS_AS(Spec::cbar(0), DomainError);
    CHECK_THROWS_AS(Spec::block(0, 1), DomainError);
    CHECK_THROWS_AS(Spec::block(1, 0), DomainError);
    CHECK_THROWS_AS(Spec::bplus(-1, 0), DomainError);
    CHECK_THROWS_AS(Spec::bplus(2, 1), DomainError);
    CHECK_NOTHROW(Spec::d(1, 0));
    CHECK_THROWS_AS(parse_family("nope"), UsageError);
    CHECK(parse_family("bplus+") == Family::BPlusPlus1);
  }

  TEST_CASE("central generators") {
    const auto block = Spec::block(1, 2, 1, 1, 1);
    CHECK(block.degree_of(BasisElement::C1()) == std::optional(GradedIndex{-1, 2}));
    CHECK(block.degree_of(BasisElement::C2()) == std::optional(GradedIndex{-2, 4}));
    // (-alpha, beta) is not integral: no c1.
    CHECK_FALSE(Spec::block(q("1/2"), 2, 1).degree_of(BasisElement::C1()).has_value());
    CHECK_FALSE(Spec::vir(1).degree_of(BasisElement::C1()).has_value());
  }

  TEST_CASE("symbolic central parameters") {
    const RingPtr r = PolyRing::make({"a1", "a2", "a2p"});
    const MultiPoly a1 = MultiPoly::variable(r, "a1");
    const auto block = AlgebraSpec<MultiPoly>::block(1, 2, a1, MultiPoly::variable(r, "a2"),
                                                     MultiPoly::variable(r, "a2p"));
    CHECK(block.basis_bracket({0, 1}, {-1, 1}).coefficient(BasisElement::C1()) == a1);
  }

  TEST_CASE("structure tables") {
    const auto rows = structure_table(Spec::vir(1), 1);
    CHECK(rows.size() == 81);
    bool seen = false;
    for (const auto& r : rows)
      if (r.left == GradedIndex{1, 0} && r.right == GradedIndex{0, 1}) {
        seen = true;
        CHECK(r.result.zero());
      }
    CHECK(seen);
    CHECK(rows.front().left == GradedIndex{-1, -1});
    CHECK(rows.back().right == GradedIndex{1, 1});

    for (const auto& spec : {Spec::vir(1), Spec::c(2), Spec::d(1, 3), Spec::block(1, 2, 1, 1, 1)}) {
      const auto zero = structure_table(spec, 0);
      REQUIRE(zero.size() == 1);
      CHECK(zero[0].left == GradedIndex{0, 0});
      CHECK(zero[0].result.zero());
    }

    for (const auto& r : structure_table(Spec::c(q("2/3")), 2))
      if (r.left.j <= -2 && r.right.j <= -2) CHECK(r.result.zero());
    CHECK_THROWS_AS(structure_table(Spec::vir(1), -1), UsageError);
  }

  TEST_CASE("factorial_ratio") {
    CHECK(factorial_ratio(3, 1) == Rational(6));
    CHECK(factorial_ratio(0, 0) == Rational(1));
    CHECK(factorial_ratio(2, 5) == Rational(0));
    CHECK(factorial_ratio(2, -1) == Rational(0));
    CHECK(factorial_ratio(5, 5) == Rational(1));
  }

  TEST_CASE("CBar is C with j negated") {
    const Rational a = q("2/3");
    const auto c = Spec::c(a), cb = Spec::cbar(a);
    for (auto x : window_indices(3))
      for (auto y : window_indices(3)) {
        const E lhs = cb.basis_bracket(x, y);
        E rhs;
        const E mirrored = c.basis_bracket({x.i, -x.j}, {y.i, -y.j});
        for (const auto& [b, v] : mirrored.terms())
          rhs.add_term(BasisElement::L(b.index.i, -b.index.j), v);
        CHECK(lhs == rhs);
      }
  }

  TEST_CASE("Vir is D with beta = 0") {
    for (const Rational& a : {q("1/2"), q("-3"), q("5/7")}) {
      const auto v = structure_table(Spec::vir(a), 2);
      const auto d = structure_table(Spec::d(a, 0), 2);
      REQUIRE(v.size() == d.size());
      for (std::size_t n = 0; n < v.size(); ++n) CHECK(v[n].result == d[n].result);
    }
  }

  TEST_CASE("literal C target is reported but off-grade") {
    StructureParams p{Family::C, 1, 0, true};
    const LTerm t = l_bracket(p, {0, 1}, {3, -4});
    CHECK(t.target == GradedIndex{-4, 4});
    p.literal_c_target = false;
    CHECK(l_bracket(p, {0, 1}, {3, -4}).target == GradedIndex{3, -3});
  }
}
