#include <doctest.h>

#include "satmon/borel.hpp"
#include "satmon/ideal.hpp"
#include "satmon/rng.hpp"
#include "satmon/verify.hpp"

using namespace satmon;

namespace {

MonomialIdeal ideal(const std::string& text, int n) { return parse_ideal_text(text, n); }

} // namespace

TEST_CASE("minimalize") {
  CHECK(ideal("x1, x1^2, x1*x2", 2) == ideal("x1", 2));
  MonomialIdeal sf = ideal("x1*x2, x1*x3, x2*x3", 3);
  CHECK(sf.gens().size() == 3);
  CHECK(minimalize({}, 3).is_zero());
  CHECK(minimalize({Monomial::unit(2), Monomial({1, 0})}, 2).is_unit());
}

TEST_CASE("contains") {
  MonomialIdeal sf = ideal("x1*x2, x1*x3, x2*x3", 3);
  CHECK(contains(sf, parse_monomial("x1*x2*x3", 3)));
  CHECK(!contains(sf, parse_monomial("x1^2", 3)));
  CHECK(!contains(MonomialIdeal::zero(3), parse_monomial("x1", 3)));
  CHECK(contains(MonomialIdeal::unit_ideal(3), Monomial::unit(3)));
}

TEST_CASE("restrict_bounded") {
  MonomialIdeal I = ideal("x1^2, x1*x2, x2^2", 2);
  CHECK(restrict_bounded(I, BoundVector({1, 2})) == ideal("x1*x2, x2^2", 2));
  CHECK(restrict_bounded(I, BoundVector({5, 5})) == I);
  CHECK(restrict_bounded(I, BoundVector({-1, 5})).is_zero());
}

TEST_CASE("product and power") {
  MonomialIdeal sf = ideal("x1*x2, x1*x3, x2*x3", 3);
  MonomialIdeal square = power(sf, 2);
  CHECK(square == ideal("x1^2*x2^2, x1^2*x2*x3, x1*x2^2*x3, x1^2*x3^2, x1*x2*x3^2, x2^2*x3^2", 3));
  CHECK(product(sf, MonomialIdeal::unit_ideal(3)) == sf);
  CHECK(product(sf, MonomialIdeal::zero(3)).is_zero());
  CHECK(power(sf, 0) == MonomialIdeal::unit_ideal(3));
  CHECK(power(sf, 1) == sf);

  MonomialIdeal four = ideal("x1*x2, x1*x3, x1*x4, x2*x3", 4);
  CHECK(power(four, 2) ==
        ideal("x1^2*x2^2, x1^2*x2*x3, x1^2*x2*x4, x1*x2^2*x3, x1^2*x3^2, x1^2*x3*x4, "
              "x1*x2*x3^2, x1^2*x4^2, x1*x2*x3*x4, x2^2*x3^2",
              4));
}

TEST_CASE("intersect") {
  CHECK(intersect(ideal("x2, x3", 3), ideal("x1, x3", 3)) == ideal("x3, x1*x2", 3));
  MonomialIdeal I = ideal("x1^2, x2^3", 3);
  CHECK(intersect(I, MonomialIdeal::unit_ideal(3)) == I);
  CHECK(intersect(I, MonomialIdeal::zero(3)).is_zero());
}

TEST_CASE("intersection membership property") {
  SplitMix64 rng(21);
  for (int t = 0; t < 40; ++t) {
    RandomIdealParams p;
    p.n = 3;
    p.deg_max = 4;
    MonomialIdeal I = random_strongly_stable(rng, p);
    MonomialIdeal J = random_strongly_stable(rng, p);
    MonomialIdeal meet = intersect(I, J);
    for (int probe = 0; probe < 25; ++probe) {
      std::vector<int> exps(3);
      for (auto& e : exps) e = static_cast<int>(rng.next_below(6));
      Monomial u(exps);
      CHECK((contains(I, u) && contains(J, u)) == contains(meet, u));
    }
  }
}

TEST_CASE("product membership and commutativity on random ideals") {
  SplitMix64 rng(22);
  for (int t = 0; t < 30; ++t) {
    RandomIdealParams p;
    p.n = 3;
    p.deg_max = 3;
    MonomialIdeal I = random_strongly_stable(rng, p);
    MonomialIdeal J = random_strongly_stable(rng, p);
    MonomialIdeal prod = product(I, J);
    CHECK(prod == product(J, I));
    for (const auto& u : I.gens()) {
      for (const auto& v : J.gens()) {
        CHECK(contains(prod, mul(u, v)));
      }
    }
    CHECK(power(I, 3) == product(power(I, 2), I));
    CHECK(product(product(I, J), I) == product(I, product(J, I)));
  }
}

TEST_CASE("equigenerated") {
  CHECK(!is_equigenerated(ideal("x1, x2^2", 2)));
  CHECK(is_equigenerated(ideal("x1*x2, x1*x3, x2*x3", 3)));
  CHECK(is_equigenerated(MonomialIdeal::zero(2)));
  CHECK(is_equigenerated(MonomialIdeal::unit_ideal(2)));
}

TEST_CASE("stability predicates") {
  MonomialIdeal sf = ideal("x1*x2, x1*x3, x2*x3", 3);
  CHECK(!is_strongly_stable(sf)); // x1 * (x1 x3) / x3 = x1^2 is missing
  CHECK(is_bounded_strongly_stable(sf, BoundVector({1, 1, 1})));
  CHECK(!is_bounded_strongly_stable(sf, BoundVector({2, 1, 1})));

  MonomialIdeal stable = ideal("x1^3, x1^2*x2, x1*x2^2, x1*x2*x3", 3);
  CHECK(is_bounded_stable(stable, BoundVector({3, 2, 1})));
  CHECK(!is_bounded_strongly_stable(stable, BoundVector({3, 2, 1})));

  CHECK(is_strongly_stable(MonomialIdeal::zero(3)));
  CHECK(is_strongly_stable(MonomialIdeal::unit_ideal(3)));
  CHECK(is_stable(ideal("x1^2, x1*x2, x2^2, x2*x3", 3)));
  CHECK(!is_stable(sf));

  // generators outside the bound disqualify the bounded predicates
  CHECK(!is_bounded_strongly_stable(ideal("x1^2", 3), BoundVector({1, 1, 1})));
}

TEST_CASE("products of strongly stable ideals stay strongly stable") {
  SplitMix64 rng(23);
  for (int t = 0; t < 40; ++t) {
    RandomIdealParams p;
    p.n = 4;
    p.deg_max = 4;
    MonomialIdeal I = random_strongly_stable(rng, p);
    MonomialIdeal J = random_strongly_stable(rng, p);
    CHECK(is_strongly_stable(I));
    CHECK(is_strongly_stable(J));
    CHECK(is_strongly_stable(product(I, J)));
  }
}

TEST_CASE("restriction stays inside the ideal") {
  SplitMix64 rng(24);
  for (int t = 0; t < 40; ++t) {
    RandomIdealParams p;
    p.n = 3;
    p.deg_max = 4;
    MonomialIdeal I = random_strongly_stable(rng, p);
    std::vector<int> c(3);
    for (auto& e : c) e = static_cast<int>(rng.next_below(4));
    MonomialIdeal restricted = restrict_bounded(I, BoundVector(c));
    for (const auto& g : restricted.gens()) CHECK(contains(I, g));
  }
}

TEST_CASE("ideal text parsing") {
  CHECK(parse_ideal_text("0", 3).is_zero());
  CHECK(parse_ideal_text("1", 3).is_unit());
  CHECK(parse_ideal_text("x1*x2, x2^2, x1*x2", 2).gens().size() == 2);
  CHECK(to_text(MonomialIdeal::zero(2)) == "0");
  CHECK(to_text(ideal("x2^2, x1*x2", 2)) == "x1*x2, x2^2");
}
