#include <doctest.h>

#include "satmon/borel.hpp"
#include "satmon/rng.hpp"
#include "satmon/saturation.hpp"
#include "satmon/verify.hpp"

using namespace satmon;

namespace {

MonomialIdeal ideal(const std::string& text, int n) { return parse_ideal_text(text, n); }

} // namespace

TEST_CASE("colon_var") {
  CHECK(colon_var(ideal("x1^2, x1*x2", 2), 1) == ideal("x1, x2", 2));
  CHECK(colon_var(ideal("x1*x2, x1*x3, x2*x3", 3), 1) == ideal("x2, x3", 3));
  MonomialIdeal I = ideal("x2^2, x2*x3", 3);
  CHECK(colon_var(I, 1) == I);
  CHECK_THROWS_AS(colon_var(I, 4), NotApplicable);
  CHECK(colon_var(MonomialIdeal::zero(3), 2).is_zero());
}

TEST_CASE("colon_max") {
  int n = 4;
  std::vector<Monomial> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(Monomial::variable(i, n));
  CHECK(colon_max(MonomialIdeal(vars, n)) == MonomialIdeal::unit_ideal(n));

  MonomialIdeal sf = ideal("x1*x2, x1*x3, x2*x3", 3);
  CHECK(colon_max(sf) == sf);

  CHECK(colon_max(MonomialIdeal::zero(3)).is_zero());
  CHECK(colon_max(MonomialIdeal::unit_ideal(3)).is_unit());
}

TEST_CASE("saturate fixed points and chains") {
  SaturationReport unit_report = saturate(MonomialIdeal::unit_ideal(2));
  CHECK(unit_report.sat == 0);
  CHECK(unit_report.chain.size() == 2);
  CHECK(unit_report.saturation.is_unit());

  CHECK(saturate(MonomialIdeal::zero(3)).sat == 0);

  // single variable: (x1^d) needs d steps
  SaturationReport principal = saturate(ideal("x1^3", 1));
  CHECK(principal.sat == 3);
  CHECK(principal.saturation.is_unit());

  MonomialIdeal sf = ideal("x1*x2, x1*x3, x2*x3", 3);
  CHECK(saturate(sf).sat == 0);
  CHECK(saturate(power(sf, 2)).sat == 1);

  SaturationReport cocoa = saturate(ideal("x1, x2^4, x2^3*x3, x2^2*x3^2", 3));
  CHECK(cocoa.sat == 2);
}

TEST_CASE("saturate report invariants") {
  SplitMix64 rng(31);
  for (int t = 0; t < 50; ++t) {
    RandomIdealParams p;
    p.n = rng.next_int(1, 4);
    p.deg_max = 4;
    MonomialIdeal I = random_strongly_stable(rng, p);
    SaturationReport report = saturate(I);
    REQUIRE(report.chain.size() >= 2);
    CHECK(report.chain.size() == report.layers.size());
    CHECK(static_cast<int>(report.chain.size()) == report.sat + 2);
    auto last = report.chain.size() - 1;
    CHECK(report.chain[last] == report.chain[last - 1]);
    for (std::size_t l = 0; l + 2 < report.chain.size(); ++l) {
      CHECK(report.chain[l] != report.chain[l + 1]);
      for (const auto& g : report.chain[l].gens()) {
        CHECK(contains(report.chain[l + 1], g));
      }
    }
    CHECK(report.saturation == report.chain.back());
    CHECK(report.layers.back().is_zero());
  }
}

TEST_CASE("strongly stable sat formula") {
  MonomialIdeal I = borel_closure({parse_monomial("x2^2*x3^2", 3), parse_monomial("x1*x3", 3)}, 3);
  CHECK(sat_strongly_stable_formula(I) == 2);
  CHECK(saturate(I).sat == 2);

  MonomialIdeal principal = borel_closure({parse_monomial("x1*x3^2", 3)}, 3);
  CHECK(principal ==
        ideal("x1*x3^2, x1^2*x3, x1*x2*x3, x1^3, x1^2*x2, x1*x2^2", 3));
  CHECK(sat_strongly_stable_formula(principal) == 2);
  CHECK(saturate(principal).sat == 2);

  MonomialIdeal no_xn = borel_closure({parse_monomial("x1*x2", 3)}, 3);
  CHECK(sat_strongly_stable_formula(no_xn) == 0);

  CHECK_THROWS_AS(sat_strongly_stable_formula(ideal("x1*x2, x1*x3, x2*x3", 3)), NotApplicable);
  CHECK_THROWS_AS(sat_strongly_stable_formula(MonomialIdeal::zero(3)), NotApplicable);
}

TEST_CASE("formula vs oracle up to five variables and degree six") {
  SplitMix64 rng(33);
  for (int t = 0; t < 30; ++t) {
    RandomIdealParams p;
    p.n = 5;
    p.deg_max = 6;
    MonomialIdeal I = random_strongly_stable(rng, p);
    CHECK(sat_strongly_stable_formula(I) == saturate(I).sat);
  }
}

TEST_CASE("colon shortcut equals intersection for strongly stable ideals") {
  SplitMix64 rng(32);
  for (int t = 0; t < 60; ++t) {
    RandomIdealParams p;
    p.n = rng.next_int(2, 4);
    p.deg_max = 4;
    MonomialIdeal I = random_strongly_stable(rng, p);
    MonomialIdeal general = colon_var(I, 1);
    for (int var = 2; var <= I.dim(); ++var) general = intersect(general, colon_var(I, var));
    CHECK(colon_var(I, I.dim()) == general);
    CHECK(colon_max(I) == general);
  }
}

TEST_CASE("bounded sat formula on the squarefree example") {
  MonomialIdeal sf = ideal("x1*x2, x1*x3, x2*x3", 3);
  CHECK(sat_equigen_bounded_formula(sf, BoundVector({1, 1, 1})) == 0);
  MonomialIdeal square = power(sf, 2);
  CHECK(sat_equigen_bounded_formula(square, BoundVector({2, 2, 2})) == 1);
}

TEST_CASE("bounded sat formula example B^c(x1 x2 x3)") {
  BoundVector c({2, 2, 2});
  MonomialIdeal I = bounded_borel_closure({parse_monomial("x1*x2*x3", 3)}, c, 3);
  CHECK(I == ideal("x1*x2*x3, x1^2*x2, x1^2*x3, x1*x2^2", 3));
  CHECK(sat_equigen_bounded_formula(I, c) == 1);
  CHECK(saturate(I).sat == 1);
}

TEST_CASE("formula preconditions hard-fail") {
  MonomialIdeal mixed = ideal("x1, x2^4, x2^3*x3, x2^2*x3^2", 3);
  BoundVector c({1, 4, 2});
  CHECK(is_bounded_strongly_stable(mixed, c));
  CHECK_THROWS_AS(sat_equigen_bounded_formula(mixed, c), NotApplicable);
  CHECK(bounded_witness_depth(mixed, c) == 1); // differs from the true sat 2
  CHECK_THROWS_AS(socle_equigen_bounded(MonomialIdeal::zero(3), c), NotApplicable);
  CHECK_THROWS_AS(layer_formula_equigen(mixed, c, 1), NotApplicable);
  // stable-but-not-strongly-stable input is rejected by the strongly stable formula
  MonomialIdeal stable = ideal("x1^3, x1^2*x2, x1*x2^2, x1*x2*x3", 3);
  CHECK_THROWS_AS(sat_equigen_bounded_formula(stable, BoundVector({3, 2, 1})), NotApplicable);
}

TEST_CASE("socle of the bounded stable example") {
  MonomialIdeal I = ideal("x1^3, x1^2*x2, x1*x2^2, x1*x2*x3", 3);
  BoundVector c({3, 2, 1});
  MonomialIdeal socle = socle_equigen_bounded(I, c);
  CHECK(socle == ideal("x1*x2", 3));
  CHECK(colon_max(I) == sum(I, socle));
  CHECK(!is_bounded_stable(socle, BoundVector({2, 1, 0})));

  MonomialIdeal sf = ideal("x1*x2, x1*x3, x2*x3", 3);
  CHECK(socle_equigen_bounded(sf, BoundVector({1, 1, 1})).is_zero());

  MonomialIdeal no_xn = ideal("x1^2, x1*x2, x2^2", 3);
  CHECK(socle_equigen_bounded(no_xn, BoundVector({2, 2, 2})).is_zero());
}

TEST_CASE("layer formula examples") {
  // I_{(2,2,2),3,3} has layer 1 equal to the squarefree Veronese ideal
  std::vector<Monomial> gens;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int cc = 0; cc <= 2; ++cc) {
        if (a + b + cc == 3) gens.push_back(Monomial({a, b, cc}));
      }
    }
  }
  MonomialIdeal I(gens, 3);
  BoundVector c({2, 2, 2});
  CHECK(layer_formula_equigen(I, c, 1) == ideal("x1*x2, x1*x3, x2*x3", 3));
  CHECK(layer_formula_equigen(I, c, 7).is_zero()); // past every x3-exponent

  MonomialIdeal sf = ideal("x1*x2, x1*x3, x2*x3", 3);
  CHECK(layer_formula_equigen(sf, BoundVector({1, 1, 1}), 1).is_zero());
}

TEST_CASE("witness depth edge cases") {
  CHECK(bounded_witness_depth(MonomialIdeal::zero(3), BoundVector({1, 1, 1})) == -1);
  CHECK(bounded_witness_depth(MonomialIdeal::unit_ideal(3), BoundVector({1, 1, 1})) == 0);
  CHECK(bounded_witness_depth(ideal("x1^9", 1), BoundVector({9})) == 9);
}
