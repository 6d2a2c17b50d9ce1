#pragma once

#include <utility>
#include <vector>

#include "satmon/ideal.hpp"
#include "satmon/rational.hpp"

namespace satmon {

/// Parameters of a Veronese-type ideal: all monomials of total degree
/// `degree` whose exponents stay under `bounds` slotwise. Enumeration works
/// for arbitrary integer data; the closed-form operations additionally
/// require the standing hypotheses (dim > 1, degree >= 0, bounds
/// non-increasing with last entry >= 0, sum >= degree).
struct VeroneseSpec {
  std::vector<int> bounds;
  int degree = 0;

  int dim() const { return static_cast<int>(bounds.size()); }
  long long bound_sum() const {
    long long s = 0;
    for (int b : bounds) s += b;
    return s;
  }
};

/// Piecewise linear description of k -> sat(I^k): the piece for k is
/// selected by k mod period, and evaluates to pieces[i].first * k +
/// pieces[i].second, always an integer.
struct QuasiLinearForm {
  int period = 1;
  std::vector<std::pair<Rational, Rational>> pieces;

  long long evaluate(long long k) const;
};

/// Enumerates the generator set; already minimal (equigenerated, distinct).
MonomialIdeal veronese_ideal(const VeroneseSpec& spec);

/// Vanishing criterion: zero iff some bound is negative, the bound sum is
/// below the degree, or the degree is negative.
bool veronese_is_zero(const VeroneseSpec& spec);

/// Number of generators, without enumerating them (bounded-composition
/// count); used to size-cap grid sweeps.
long long count_veronese_gens(const VeroneseSpec& spec);

/// J_layer(I_{a,n,d}) = I_{a - layer*e, n, d - layer}.
MonomialIdeal veronese_layer(const VeroneseSpec& spec, int layer);

/// Closed form min{ floor((sum a_i - d) / (n-1)), a_n, d }; dim 1 gives d.
long long sat_veronese(const VeroneseSpec& spec);

/// Closed form for powers: min{ floor(k (sum a_i - d) / (n-1)), k a_n, k d }.
long long sat_veronese_power(const VeroneseSpec& spec, long long k);

/// Checks power(I_{a,n,d}, k) == I_{ka,n,kd} by direct computation.
bool veronese_power_identity(const VeroneseSpec& spec, int k);

/// Checks I : m == I + I_{a-e,n,d-1} by direct computation.
bool veronese_colon_identity(const VeroneseSpec& spec);

/// The explicit quasi-linear function k -> sat(I^k). Period 1 when the
/// minimum is a_n or d; otherwise period n - 1 with pieces
/// (s, floor(s i) - s i) for s = (sum a_i - d) / (n - 1).
QuasiLinearForm quasilinear(const VeroneseSpec& spec);

} // namespace satmon
