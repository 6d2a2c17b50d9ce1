#pragma once

#include <vector>

#include "satmon/ideal.hpp"

namespace satmon {

/// Smallest strongly stable ideal containing the seeds: worklist closure
/// under all exchange moves x_i * u / x_j (i < j, x_j | u). Empty input
/// gives the zero ideal.
MonomialIdeal borel_closure(const std::vector<Monomial>& seeds, int n);

/// Smallest stable ideal containing the seeds: closure under the moves
/// x_i * u / x_m(u) only.
MonomialIdeal stable_closure(const std::vector<Monomial>& seeds, int n);

/// Smallest c-bounded strongly stable ideal containing the seeds: closure
/// over moves whose results stay c-bounded. A bound with a negative entry
/// makes every closure zero; a seed violating a nonnegative bound throws.
MonomialIdeal bounded_borel_closure(const std::vector<Monomial>& seeds, const BoundVector& c,
                                    int n);

/// Stable counterpart of bounded_borel_closure.
MonomialIdeal bounded_stable_closure(const std::vector<Monomial>& seeds, const BoundVector& c,
                                     int n);

/// Borel order on equal-degree monomials: v in B(u), decided by sorted
/// index domination (equivalent to exchange-move reachability).
bool precedes_borel(const Monomial& v, const Monomial& u);

/// B(seed) restricted to its c-bounded members. Unlike the closure above,
/// the seed itself may violate the bound; for bounded seeds this coincides
/// with bounded_borel_closure. The power/layer theorems need this form:
/// their shifted seeds u^k / x_n^l can leave the shifted bound while
/// smaller monomials in their Borel order do not.
MonomialIdeal restricted_borel_closure(const Monomial& seed, const BoundVector& c);

/// k-th power of B^c(u) computed as B^{kc}(u^k); the two agree for
/// c-bounded principal strongly stable ideals (cross-checked against the
/// iterated product in debug builds).
MonomialIdeal principal_power(const Monomial& u, const BoundVector& c, int k);

/// Layer ideal J_layer(B^c(u)^k) = B^{kc - layer*e}(u^k / x_n^layer);
/// requires x_n^layer | u^k, and gives the zero ideal when the shifted
/// bound no longer admits the seed.
MonomialIdeal principal_power_layer(const Monomial& u, const BoundVector& c, int k, int layer);

/// sat(B^c(u)^k) via the witness-depth formula on B^{kc}(u^k).
int sat_principal_power(const Monomial& u, const BoundVector& c, int k);

} // namespace satmon
