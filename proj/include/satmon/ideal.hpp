#pragma once

#include <string>
#include <vector>

#include "satmon/monomial.hpp"

namespace satmon {

/// A monomial ideal held as its unique minimal generating set G(I), in
/// canonical order. Empty gens is the zero ideal; gens = {1} the unit ideal.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  /// Minimalizes: dedups and drops generators divisible by another.
  MonomialIdeal(std::vector<Monomial> gens, int n);

  static MonomialIdeal zero(int n) { return MonomialIdeal({}, n); }
  static MonomialIdeal unit_ideal(int n) { return MonomialIdeal({Monomial::unit(n)}, n); }

  int dim() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::vector<Monomial> ms, int n);

bool contains(const MonomialIdeal& I, const Monomial& u);

/// Ideal generated by the c-bounded generators of I.
MonomialIdeal restrict_bounded(const MonomialIdeal& I, const BoundVector& c);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

/// Iterated product with minimalization between steps; power(I, 0) = (1).
MonomialIdeal power(const MonomialIdeal& I, int k);

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// I + J, minimalized.
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);

/// True when all generators share one total degree (zero and unit: true).
bool is_equigenerated(const MonomialIdeal& I);

// Exchange-closure predicates of Definition 1.1. Strongly stable checks every
// j with x_j | u; stable only j = m(u). The bounded variants require every
// generator to be c-bounded and only demand membership of exchanges that stay
// c-bounded.
bool is_strongly_stable(const MonomialIdeal& I);
bool is_stable(const MonomialIdeal& I);
bool is_bounded_strongly_stable(const MonomialIdeal& I, const BoundVector& c);
bool is_bounded_stable(const MonomialIdeal& I, const BoundVector& c);

/// Comma-separated generator list in monomial text syntax, "0" for zero.
std::string to_text(const MonomialIdeal& I);

/// Parses a comma-separated generator list ("0" for the zero ideal) and
/// minimalizes.
MonomialIdeal parse_ideal_text(const std::string& text, int n);

} // namespace satmon
