#include "satmon/saturation.hpp"

#include <algorithm>
#include <cassert>

namespace satmon {

MonomialIdeal colon_var(const MonomialIdeal& I, int var) {
  if (var < 1 || var > I.dim()) {
    throw NotApplicable("colon_var: variable x" + std::to_string(var) + " outside 1.." +
                        std::to_string(I.dim()));
  }
  std::vector<Monomial> out;
  out.reserve(I.gens().size());
  for (const auto& u : I.gens()) {
    if (u.exp(var) >= 1) {
      std::vector<int> e = u.exps();
      e[static_cast<std::size_t>(var - 1)] -= 1;
      out.emplace_back(std::move(e));
    } else {
      out.push_back(u);
    }
  }
  return MonomialIdeal(std::move(out), I.dim());
}

namespace {

MonomialIdeal colon_max_general(const MonomialIdeal& I) {
  MonomialIdeal acc = colon_var(I, 1);
  for (int var = 2; var <= I.dim(); ++var) {
    if (acc == I) return acc; // intersection can only shrink toward I
    acc = intersect(acc, colon_var(I, var));
  }
  return acc;
}

} // namespace

MonomialIdeal colon_max(const MonomialIdeal& I) {
  if (I.dim() == 0 || I.is_zero()) return I;
  if (I.dim() == 1) return colon_var(I, 1);
  if (is_strongly_stable(I)) {
    MonomialIdeal fast = colon_var(I, I.dim());
    assert(fast == colon_max_general(I));
    return fast;
  }
  return colon_max_general(I);
}

SaturationReport saturate(const MonomialIdeal& I) {
  SaturationReport report;
  report.chain.push_back(I);
  for (int step = 0;; ++step) {
    if (step > caps().saturation_step_cap) {
      throw CapExceeded("saturate: chain exceeded " +
                        std::to_string(caps().saturation_step_cap) + " steps");
    }
    MonomialIdeal next = colon_max(report.chain.back());
    bool stabilized = next == report.chain.back();
    report.chain.push_back(std::move(next));
    if (stabilized) break;
  }
  report.sat = static_cast<int>(report.chain.size()) - 2;
  report.saturation = report.chain.back();

  // Any monomial of (I : m^l) \ (I : m^{l-1}) is a minimal generator of
  // I : m^l, since m * (I : m^l) lies in I : m^{l-1}; so the layer is
  // generated by exactly the new minimal generators of the step.
  report.layers.push_back(I);
  for (std::size_t l = 1; l < report.chain.size(); ++l) {
    std::vector<Monomial> fresh;
    for (const auto& g : report.chain[l].gens()) {
      if (!contains(report.chain[l - 1], g)) fresh.push_back(g);
    }
    report.layers.emplace_back(std::move(fresh), I.dim());
  }
  return report;
}

int sat_strongly_stable_formula(const MonomialIdeal& I) {
  if (I.is_zero()) {
    throw NotApplicable("sat_strongly_stable_formula: zero ideal");
  }
  if (!is_strongly_stable(I)) {
    throw NotApplicable("sat_strongly_stable_formula: ideal is not strongly stable");
  }
  int best = 0;
  for (const auto& u : I.gens()) {
    best = std::max(best, u.exp(I.dim()));
  }
  return best;
}

int bounded_witness_depth(const MonomialIdeal& I, const BoundVector& c) {
  detail::require_same_dim(I.dim(), c.dim(), "bounded_witness_depth");
  int n = I.dim();
  int best = -1;
  for (const auto& u : I.gens()) {
    // Feasible l for this generator: l <= u_n, u_n <= c_n (slot n is
    // unaffected by the shift), and u_i <= c_i - l for i < n.
    if (u.exp(n) > c.entry(n)) continue;
    int depth = u.exp(n);
    for (int i = 1; i < n && depth >= 0; ++i) {
      depth = std::min(depth, c.entry(i) - u.exp(i));
    }
    best = std::max(best, depth);
  }
  return best;
}

int sat_equigen_bounded_formula(const MonomialIdeal& I, const BoundVector& c) {
  if (I.is_zero()) {
    throw NotApplicable("sat_equigen_bounded_formula: zero ideal");
  }
  if (!is_equigenerated(I)) {
    throw NotApplicable("sat_equigen_bounded_formula: ideal is not equigenerated");
  }
  if (!is_bounded_strongly_stable(I, c)) {
    throw NotApplicable("sat_equigen_bounded_formula: ideal is not c-bounded strongly stable");
  }
  int depth = bounded_witness_depth(I, c);
  assert(depth >= 0);
  return depth;
}

namespace {

std::vector<Monomial> shifted_quotients(const MonomialIdeal& I, const BoundVector& c, int l) {
  int n = I.dim();
  BoundVector shifted = c.shifted(l);
  std::vector<Monomial> out;
  for (const auto& u : I.gens()) {
    if (u.exp(n) < l) continue;
    std::vector<int> e = u.exps();
    e[static_cast<std::size_t>(n - 1)] -= l;
    Monomial q(std::move(e));
    if (is_bounded(q, shifted)) out.push_back(std::move(q));
  }
  return out;
}

} // namespace

MonomialIdeal socle_equigen_bounded(const MonomialIdeal& I, const BoundVector& c) {
  if (I.is_zero()) {
    throw NotApplicable("socle_equigen_bounded: zero ideal");
  }
  if (!is_equigenerated(I)) {
    throw NotApplicable("socle_equigen_bounded: ideal is not equigenerated");
  }
  if (!is_bounded_stable(I, c)) {
    throw NotApplicable("socle_equigen_bounded: ideal is not c-bounded stable");
  }
  return MonomialIdeal(shifted_quotients(I, c, 1), I.dim());
}

MonomialIdeal layer_formula_equigen(const MonomialIdeal& I, const BoundVector& c, int layer) {
  if (layer < 1) {
    throw NotApplicable("layer_formula_equigen: layer must be >= 1");
  }
  if (I.is_zero()) {
    throw NotApplicable("layer_formula_equigen: zero ideal");
  }
  if (!is_equigenerated(I)) {
    throw NotApplicable("layer_formula_equigen: ideal is not equigenerated");
  }
  if (!is_bounded_strongly_stable(I, c)) {
    throw NotApplicable("layer_formula_equigen: ideal is not c-bounded strongly stable");
  }
  // The closed form describes J_l only while J_{l-1} is nonzero; past the
  // first vanishing layer every later one is zero.
  for (int j = 1; j < layer; ++j) {
    if (shifted_quotients(I, c, j).empty()) return MonomialIdeal::zero(I.dim());
  }
  return MonomialIdeal(shifted_quotients(I, c, layer), I.dim());
}

} // namespace satmon
