#pragma once

#include <vector>

#include "satmon/ideal.hpp"

namespace satmon {

/// Full record of a saturation computation: the colon chain I : m^l up to
/// (and including) the first repeated entry, the layer ideals J_l, the
/// saturation I^sat and the saturation number.
///
/// chain has sat + 2 entries and is strictly ascending except for the last
/// two, which are equal. layers is index-aligned with chain: layers[0] = I,
/// layers[l] collects the generators entering at step l, and
/// layers[sat + 1] is zero.
struct SaturationReport {
  std::vector<MonomialIdeal> chain;
  std::vector<MonomialIdeal> layers;
  MonomialIdeal saturation;
  int sat = 0;
};

/// Standard colon by one variable: divide each generator by x_i when
/// possible, then minimalize. var is 1-based.
MonomialIdeal colon_var(const MonomialIdeal& I, int var);

/// I : m as the intersection of the variable colons. Strongly stable ideals
/// take the I : x_n shortcut (cross-checked against the general path in
/// debug builds).
MonomialIdeal colon_max(const MonomialIdeal& I);

/// Iterates colon_max to stabilization. Guarded by the saturation step cap;
/// hitting it throws CapExceeded.
SaturationReport saturate(const MonomialIdeal& I);

/// sat of a nonzero strongly stable ideal: the largest x_n-exponent among
/// its generators. Throws NotApplicable off-hypothesis.
int sat_strongly_stable_formula(const MonomialIdeal& I);

/// sat of a nonzero equigenerated c-bounded strongly stable ideal: the
/// deepest l witnessed by some generator u with x_n^l | u and
/// Deg(u / x_n^l) <= c - l*e. Throws NotApplicable off-hypothesis.
int sat_equigen_bounded_formula(const MonomialIdeal& I, const BoundVector& c);

/// The socle complement J with I : m = I + J, for a nonzero equigenerated
/// c-bounded stable ideal: J = (u / x_n : u in G(I), x_n | u,
/// Deg(u / x_n) <= c - e).
MonomialIdeal socle_equigen_bounded(const MonomialIdeal& I, const BoundVector& c);

/// Layer ideal J_layer of a nonzero equigenerated c-bounded strongly stable
/// ideal via the closed form (u / x_n^l with shifted bound); returns the
/// zero ideal as soon as an earlier layer vanishes.
MonomialIdeal layer_formula_equigen(const MonomialIdeal& I, const BoundVector& c, int layer);

/// The witness depth used by the bounded formulas, with no hypothesis
/// checks: max l >= 0 such that some generator u has x_n^l | u and
/// Deg(u / x_n^l) <= c - l*e; -1 when no generator admits even l = 0.
int bounded_witness_depth(const MonomialIdeal& I, const BoundVector& c);

} // namespace satmon
