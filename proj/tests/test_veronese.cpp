#include <doctest.h>

#include "satmon/saturation.hpp"
#include "satmon/veronese.hpp"

using namespace satmon;

namespace {

MonomialIdeal ideal(const std::string& text, int n) { return parse_ideal_text(text, n); }

} // namespace

TEST_CASE("veronese enumeration") {
  CHECK(veronese_ideal({{1, 1, 1}, 2}) == ideal("x1*x2, x1*x3, x2*x3", 3));
  CHECK(veronese_ideal({{1, 1, 1}, -1}).is_zero());
  CHECK(veronese_ideal({{1, 1, 1}, 0}).is_unit());
  CHECK(veronese_ideal({{2, 2, 2}, 3}).gens().size() == 7);
  CHECK(veronese_ideal({{3, 3, 1, 2}, 6}).gens().size() == 15);
  CHECK(veronese_ideal({{2, 2, 0, 1}, 5}) == ideal("x1^2*x2^2*x4", 4));
  // generators come out already canonical
  MonomialIdeal I = veronese_ideal({{2, 2, 2}, 3});
  MonomialIdeal remade(std::vector<Monomial>(I.gens().begin(), I.gens().end()), 3);
  CHECK(I == remade);
}

TEST_CASE("vanishing criterion equals enumeration on the extended grid") {
  for (int a1 = -1; a1 <= 3; ++a1) {
    for (int a2 = -1; a2 <= 3; ++a2) {
      for (int a3 = -1; a3 <= 3; ++a3) {
        for (int d = -1; d <= 8; ++d) {
          VeroneseSpec spec{{a1, a2, a3}, d};
          CHECK(veronese_is_zero(spec) == veronese_ideal(spec).is_zero());
          CHECK(count_veronese_gens(spec) ==
                static_cast<long long>(veronese_ideal(spec).gens().size()));
        }
      }
    }
  }
}

TEST_CASE("veronese layers") {
  VeroneseSpec spec{{2, 2, 2}, 3};
  CHECK(veronese_layer(spec, 0) == veronese_ideal(spec));
  CHECK(veronese_layer(spec, 1) == ideal("x1*x2, x1*x3, x2*x3", 3));
  CHECK(veronese_layer({{1, 1, 1}, 2}, 1).is_zero());
}

TEST_CASE("closed-form sat") {
  CHECK(sat_veronese({{1, 1, 1}, 2}) == 0);
  CHECK(sat_veronese({{2, 2, 2}, 3}) == 1);
  CHECK(saturate(veronese_ideal({{2, 2, 2}, 3})).sat == 1);
  CHECK(sat_veronese({{4, 4}, 0}) == 0);
  CHECK(sat_veronese({{5}, 3}) == 3); // n = 1 returns d
  CHECK_THROWS_AS(sat_veronese({{1, 2}, 1}), NotApplicable);     // not non-increasing
  CHECK_THROWS_AS(sat_veronese({{2, -1}, 1}), NotApplicable);    // negative tail
  CHECK_THROWS_AS(sat_veronese({{1, 1}, 5}), NotApplicable);     // sum below degree
  CHECK_THROWS_AS(sat_veronese({{1, 1}, -2}), NotApplicable);    // negative degree
}

TEST_CASE("closed-form sat of powers") {
  CHECK(sat_veronese_power({{1, 1, 1}, 2}, 2) == 1);
  CHECK(sat_veronese_power({{1, 1, 1}, 2}, 1) == sat_veronese({{1, 1, 1}, 2}));
  CHECK(sat_veronese_power({{2, 2, 1}, 3}, 3) == 3);
  CHECK(sat_veronese_power({{5}, 3}, 4) == 12);
}

TEST_CASE("power identity") {
  CHECK(veronese_power_identity({{1, 1, 1}, 2}, 2));
  CHECK(veronese_power_identity({{1, 1, 1}, 2}, 1));
  CHECK(veronese_power_identity({{2, 1}, 2}, 3));
  CHECK(veronese_power_identity({{2, 2, 2}, 3}, 3));
}

TEST_CASE("colon identity") {
  CHECK(veronese_colon_identity({{1, 1, 1}, 2}));
  CHECK(veronese_colon_identity({{2, 2, 2}, 3}));
  CHECK(veronese_colon_identity({{0, 0, 0}, 4})); // zero ideal
  CHECK(veronese_colon_identity({{3, 2, 1}, 5}));
}

TEST_CASE("quasilinear forms") {
  QuasiLinearForm half = quasilinear({{1, 1, 1}, 2});
  CHECK(half.period == 2);
  CHECK(half.pieces[0].first == Rational(1, 2));
  CHECK(half.pieces[0].second == Rational(0));
  CHECK(half.pieces[1].first == Rational(1, 2));
  CHECK(half.pieces[1].second == Rational(-1, 2));
  CHECK(half.evaluate(1) == 0);
  CHECK(half.evaluate(2) == 1);
  CHECK(half.evaluate(4) == 2);

  QuasiLinearForm all_tie = quasilinear({{1, 1}, 1});
  CHECK(all_tie.period == 1);
  for (long long k = 1; k <= 6; ++k) CHECK(all_tie.evaluate(k) == k);

  QuasiLinearForm zero_tail = quasilinear({{3, 3, 0}, 2});
  CHECK(zero_tail.period == 1);
  CHECK(zero_tail.pieces[0].first == Rational(0));
  for (long long k = 1; k <= 4; ++k) CHECK(zero_tail.evaluate(k) == 0);

  QuasiLinearForm principal = quasilinear({{7}, 2});
  CHECK(principal.evaluate(5) == 10);
}

TEST_CASE("quasilinear matches the closed form everywhere on a small grid") {
  for (int a1 = 0; a1 <= 3; ++a1) {
    for (int a2 = 0; a2 <= a1; ++a2) {
      for (int a3 = 0; a3 <= a2; ++a3) {
        for (int d = 0; d <= a1 + a2 + a3; ++d) {
          VeroneseSpec spec{{a1, a2, a3}, d};
          QuasiLinearForm form = quasilinear(spec);
          for (long long k = 1; k <= 24; ++k) {
            CHECK(form.evaluate(k) == sat_veronese_power(spec, k));
          }
        }
      }
    }
  }
}

TEST_CASE("rational helper") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(3, 2).floor() == 1);
  CHECK((Rational(1, 2) * Rational(4)) == Rational(2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(5, 1).is_integer());
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
}
