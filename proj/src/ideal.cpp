#include "satmon/ideal.hpp"

#include <algorithm>

#include "satmon/kernels.hpp"

namespace satmon {

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens, int n) : n_(n) {
  for (const auto& g : gens) {
    detail::require_same_dim(g.dim(), n, "MonomialIdeal");
  }
  gens_ = kernels::minimal_elements(std::move(gens));
}

MonomialIdeal minimalize(std::vector<Monomial> ms, int n) {
  return MonomialIdeal(std::move(ms), n);
}

bool contains(const MonomialIdeal& I, const Monomial& u) {
  detail::require_same_dim(I.dim(), u.dim(), "contains");
  int du = total_degree(u);
  for (const auto& g : I.gens()) {
    if (total_degree(g) > du) return false; // gens sorted by degree
    if (divides(g, u)) return true;
  }
  return false;
}

MonomialIdeal restrict_bounded(const MonomialIdeal& I, const BoundVector& c) {
  detail::require_same_dim(I.dim(), c.dim(), "restrict_bounded");
  std::vector<Monomial> kept;
  for (const auto& g : I.gens()) {
    if (is_bounded(g, c)) kept.push_back(g);
  }
  return MonomialIdeal(std::move(kept), I.dim());
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_dim(I.dim(), J.dim(), "product");
  return MonomialIdeal(kernels::pairwise_products(I.gens(), J.gens()), I.dim());
}

MonomialIdeal power(const MonomialIdeal& I, int k) {
  if (k < 0) throw NotApplicable("power: negative exponent");
  MonomialIdeal acc = MonomialIdeal::unit_ideal(I.dim());
  for (int step = 0; step < k; ++step) {
    acc = product(acc, I);
  }
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_dim(I.dim(), J.dim(), "intersect");
  return MonomialIdeal(kernels::pairwise_lcms(I.gens(), J.gens()), I.dim());
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_dim(I.dim(), J.dim(), "sum");
  std::vector<Monomial> all = I.gens();
  all.insert(all.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(std::move(all), I.dim());
}

bool is_equigenerated(const MonomialIdeal& I) {
  if (I.gens().size() <= 1) return true;
  int d = total_degree(I.gens().front());
  return std::all_of(I.gens().begin(), I.gens().end(),
                     [d](const Monomial& g) { return total_degree(g) == d; });
}

namespace {

// Shared walk over Definition 1.1. j runs over all divisors for the strongly
// stable variants and only m(u) for the stable ones; bound == nullptr means
// the unbounded definition.
bool exchange_closed(const MonomialIdeal& I, bool strongly, const BoundVector* bound) {
  if (bound != nullptr) {
    detail::require_same_dim(I.dim(), bound->dim(), "exchange_closed");
    for (const auto& u : I.gens()) {
      if (!is_bounded(u, *bound)) return false;
    }
  }
  for (const auto& u : I.gens()) {
    int j_lo = strongly ? 2 : max_index(u);
    int j_hi = strongly ? I.dim() : max_index(u);
    for (int j = std::max(j_lo, 2); j <= j_hi; ++j) {
      if (u.exp(j) < 1) continue;
      for (int i = 1; i < j; ++i) {
        Monomial moved = exchange(u, i, j);
        if (bound != nullptr && !is_bounded(moved, *bound)) continue;
        if (!contains(I, moved)) return false;
      }
    }
  }
  return true;
}

} // namespace

bool is_strongly_stable(const MonomialIdeal& I) { return exchange_closed(I, true, nullptr); }

bool is_stable(const MonomialIdeal& I) { return exchange_closed(I, false, nullptr); }

bool is_bounded_strongly_stable(const MonomialIdeal& I, const BoundVector& c) {
  return exchange_closed(I, true, &c);
}

bool is_bounded_stable(const MonomialIdeal& I, const BoundVector& c) {
  return exchange_closed(I, false, &c);
}

std::string to_text(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::string out;
  for (const auto& g : I.gens()) {
    if (!out.empty()) out += ", ";
    out += to_text(g);
  }
  return out;
}

MonomialIdeal parse_ideal_text(const std::string& text, int n) {
  std::vector<Monomial> gens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    std::size_t a = piece.find_first_not_of(" \t\r\n");
    std::size_t b = piece.find_last_not_of(" \t\r\n");
    if (a != std::string::npos) {
      std::string token = piece.substr(a, b - a + 1);
      if (token == "0") {
        // zero-ideal token contributes nothing
      } else {
        gens.push_back(parse_monomial(token, n));
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MonomialIdeal(std::move(gens), n);
}

} // namespace satmon
