#include "satmon/borel.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

#include "satmon/saturation.hpp"

namespace satmon {

namespace {

// Breadth-first closure of one seed under degree-preserving exchange moves.
// The visited set is keyed by exponent vector; every visited node is a
// member of the closure (moves never leave the degree-d simplex, whose size
// bounds the search; the node cap guards misuse).
std::vector<Monomial> close_seed(const Monomial& seed, const BoundVector* bound,
                                 bool stable_moves) {
  std::set<std::vector<int>> visited;
  std::deque<std::vector<int>> work;
  visited.insert(seed.exps());
  work.push_back(seed.exps());
  const int n = seed.dim();
  while (!work.empty()) {
    if (visited.size() > caps().closure_node_cap) {
      throw CapExceeded("closure: visited nodes exceed cap " +
                        std::to_string(caps().closure_node_cap));
    }
    std::vector<int> u = std::move(work.front());
    work.pop_front();
    int j_hi = 0;
    for (int j = 1; j <= n; ++j) {
      if (u[static_cast<std::size_t>(j - 1)] > 0) j_hi = j;
    }
    for (int j = 2; j <= j_hi; ++j) {
      if (u[static_cast<std::size_t>(j - 1)] < 1) continue;
      if (stable_moves && j != j_hi) continue;
      for (int i = 1; i < j; ++i) {
        std::vector<int> moved = u;
        moved[static_cast<std::size_t>(i - 1)] += 1;
        moved[static_cast<std::size_t>(j - 1)] -= 1;
        if (bound != nullptr) {
          bool ok = true;
          for (int s = 0; s < n && ok; ++s) {
            ok = moved[static_cast<std::size_t>(s)] <= bound->entries()[static_cast<std::size_t>(s)];
          }
          if (!ok) continue;
        }
        if (visited.insert(moved).second) {
          work.push_back(std::move(moved));
        }
      }
    }
  }
  std::vector<Monomial> out;
  out.reserve(visited.size());
  for (const auto& e : visited) out.emplace_back(e);
  return out;
}

MonomialIdeal close_all(const std::vector<Monomial>& seeds, const BoundVector* bound,
                        bool stable_moves, int n) {
  for (const auto& s : seeds) {
    detail::require_same_dim(s.dim(), n, "closure");
  }
  if (bound != nullptr) {
    detail::require_same_dim(bound->dim(), n, "closure");
    if (bound->any_negative()) return MonomialIdeal::zero(n);
    for (const auto& s : seeds) {
      if (!is_bounded(s, *bound)) {
        throw NotApplicable("closure: seed " + to_text(s) + " is not bounded by the given vector");
      }
    }
  }
  if (seeds.empty()) return MonomialIdeal::zero(n);

  // The moves act on single monomials, so the multi-seed closure is the
  // union of the principal ones; seeds close independently.
  std::vector<std::vector<Monomial>> per_seed(seeds.size());
  const long long count = static_cast<long long>(seeds.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (count > 1)
#endif
  for (long long s = 0; s < count; ++s) {
    per_seed[static_cast<std::size_t>(s)] =
        close_seed(seeds[static_cast<std::size_t>(s)], bound, stable_moves);
  }
  std::vector<Monomial> all;
  for (auto& part : per_seed) {
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return MonomialIdeal(std::move(all), n);
}

} // namespace

MonomialIdeal borel_closure(const std::vector<Monomial>& seeds, int n) {
  return close_all(seeds, nullptr, false, n);
}

MonomialIdeal stable_closure(const std::vector<Monomial>& seeds, int n) {
  return close_all(seeds, nullptr, true, n);
}

MonomialIdeal bounded_borel_closure(const std::vector<Monomial>& seeds, const BoundVector& c,
                                    int n) {
  return close_all(seeds, &c, false, n);
}

MonomialIdeal bounded_stable_closure(const std::vector<Monomial>& seeds, const BoundVector& c,
                                     int n) {
  return close_all(seeds, &c, true, n);
}

bool precedes_borel(const Monomial& v, const Monomial& u) {
  detail::require_same_dim(v.dim(), u.dim(), "precedes_borel");
  if (total_degree(v) != total_degree(u)) return false;
  // Expand both to ascending index sequences; v is reachable from u exactly
  // when it dominates positionwise downward.
  int carried_v = 0;
  int carried_u = 0;
  int iv = 1;
  int iu = 1;
  const int d = total_degree(u);
  for (int s = 0; s < d; ++s) {
    while (carried_v == 0) {
      carried_v = v.exp(iv);
      if (carried_v == 0) ++iv;
    }
    while (carried_u == 0) {
      carried_u = u.exp(iu);
      if (carried_u == 0) ++iu;
    }
    if (iv > iu) return false;
    --carried_v;
    --carried_u;
    if (carried_v == 0) ++iv;
    if (carried_u == 0) ++iu;
  }
  return true;
}

MonomialIdeal restricted_borel_closure(const Monomial& seed, const BoundVector& c) {
  detail::require_same_dim(seed.dim(), c.dim(), "restricted_borel_closure");
  // Any c-bounded v below the seed is reachable along a path whose
  // intermediates stay under max(seed, c) slotwise, so closing under that
  // relaxed bound and filtering afterwards loses nothing.
  std::vector<int> relaxed(seed.exps());
  for (int i = 0; i < seed.dim(); ++i) {
    relaxed[static_cast<std::size_t>(i)] =
        std::max(relaxed[static_cast<std::size_t>(i)], c.entries()[static_cast<std::size_t>(i)]);
  }
  BoundVector relaxed_bound(std::move(relaxed));
  std::vector<Monomial> members = close_seed(seed, &relaxed_bound, false);
  std::vector<Monomial> bounded;
  for (auto& v : members) {
    if (is_bounded(v, c)) bounded.push_back(std::move(v));
  }
  return MonomialIdeal(std::move(bounded), seed.dim());
}

MonomialIdeal principal_power(const Monomial& u, const BoundVector& c, int k) {
  if (k < 1) throw NotApplicable("principal_power: k must be positive");
  detail::require_same_dim(u.dim(), c.dim(), "principal_power");
  if (!c.any_negative() && !is_bounded(u, c)) {
    throw NotApplicable("principal_power: seed " + to_text(u) + " is not c-bounded");
  }
  MonomialIdeal result = bounded_borel_closure({pow(u, k)}, c.scaled(k), u.dim());
  assert(result == power(bounded_borel_closure({u}, c, u.dim()), k));
  return result;
}

MonomialIdeal principal_power_layer(const Monomial& u, const BoundVector& c, int k, int layer) {
  if (k < 1) throw NotApplicable("principal_power_layer: k must be positive");
  if (layer < 0) throw NotApplicable("principal_power_layer: layer must be >= 0");
  detail::require_same_dim(u.dim(), c.dim(), "principal_power_layer");
  const int n = u.dim();
  Monomial uk = pow(u, k);
  if (uk.exp(n) < layer) {
    throw NotApplicable("principal_power_layer: x" + std::to_string(n) + "^" +
                        std::to_string(layer) + " does not divide " + to_text(uk));
  }
  std::vector<int> e = uk.exps();
  e[static_cast<std::size_t>(n - 1)] -= layer;
  Monomial seed(std::move(e));
  return restricted_borel_closure(seed, c.scaled(k).shifted(layer));
}

int sat_principal_power(const Monomial& u, const BoundVector& c, int k) {
  if (u.is_unit()) throw NotApplicable("sat_principal_power: unit seed");
  MonomialIdeal power_ideal = principal_power(u, c, k);
  int depth = bounded_witness_depth(power_ideal, c.scaled(k));
  assert(depth >= 0);
  return depth;
}

} // namespace satmon
