#include "satmon/veronese.hpp"

#include <algorithm>

#include "satmon/saturation.hpp"

namespace satmon {

long long QuasiLinearForm::evaluate(long long k) const {
  if (period < 1 || pieces.size() != static_cast<std::size_t>(period)) {
    throw NotApplicable("QuasiLinearForm: malformed form");
  }
  const auto& piece = pieces[static_cast<std::size_t>(k % period)];
  Rational value = piece.first * Rational(k) + piece.second;
  if (!value.is_integer()) {
    throw NotApplicable("QuasiLinearForm: non-integer value at k=" + std::to_string(k));
  }
  return value.num;
}

MonomialIdeal veronese_ideal(const VeroneseSpec& spec) {
  const int n = spec.dim();
  if (n < 1) throw DimensionError("veronese_ideal: empty bound vector");
  if (veronese_is_zero(spec)) return MonomialIdeal::zero(n);

  // Walk slots left to right, largest exponent first: emits the generator
  // list directly in canonical (lex-descending) order.
  std::vector<Monomial> gens;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  std::vector<long long> tail_capacity(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    tail_capacity[static_cast<std::size_t>(i)] =
        tail_capacity[static_cast<std::size_t>(i) + 1] +
        std::max(0, spec.bounds[static_cast<std::size_t>(i)]);
  }
  auto walk = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == n) {
      if (gens.size() >= caps().closure_node_cap) {
        throw CapExceeded("veronese_ideal: generator count exceeds node cap");
      }
      gens.emplace_back(current);
      return;
    }
    if (remaining > tail_capacity[static_cast<std::size_t>(slot)]) return;
    int hi = std::min(spec.bounds[static_cast<std::size_t>(slot)], remaining);
    long long rest = tail_capacity[static_cast<std::size_t>(slot) + 1];
    int lo = rest >= remaining ? 0 : static_cast<int>(remaining - rest);
    for (int b = hi; b >= lo; --b) {
      current[static_cast<std::size_t>(slot)] = b;
      self(self, slot + 1, remaining - b);
    }
    current[static_cast<std::size_t>(slot)] = 0;
  };
  walk(walk, 0, spec.degree);
  return MonomialIdeal(std::move(gens), n);
}

bool veronese_is_zero(const VeroneseSpec& spec) {
  if (spec.degree < 0) return true;
  for (int b : spec.bounds) {
    if (b < 0) return true;
  }
  return spec.bound_sum() < spec.degree;
}

long long count_veronese_gens(const VeroneseSpec& spec) {
  if (veronese_is_zero(spec)) return 0;
  std::vector<long long> table(static_cast<std::size_t>(spec.degree) + 1, 0);
  table[0] = 1;
  for (int b : spec.bounds) {
    std::vector<long long> next(table.size(), 0);
    for (int total = 0; total <= spec.degree; ++total) {
      if (table[static_cast<std::size_t>(total)] == 0) continue;
      for (int take = 0; take <= b && total + take <= spec.degree; ++take) {
        next[static_cast<std::size_t>(total + take)] += table[static_cast<std::size_t>(total)];
      }
    }
    table = std::move(next);
  }
  return table.back();
}

namespace {

void require_standing(const VeroneseSpec& spec, const char* where) {
  const int n = spec.dim();
  if (n < 1) throw DimensionError(std::string(where) + ": empty bound vector");
  if (spec.degree < 0) {
    throw NotApplicable(std::string(where) + ": degree must be >= 0");
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (spec.bounds[static_cast<std::size_t>(i)] < spec.bounds[static_cast<std::size_t>(i) + 1]) {
      throw NotApplicable(std::string(where) + ": bounds must be non-increasing");
    }
  }
  if (spec.bounds.back() < 0) {
    throw NotApplicable(std::string(where) + ": last bound must be >= 0");
  }
  if (spec.bound_sum() < spec.degree) {
    throw NotApplicable(std::string(where) + ": bound sum below degree");
  }
}

VeroneseSpec shifted_spec(const VeroneseSpec& spec, int l) {
  VeroneseSpec out = spec;
  for (int& b : out.bounds) b -= l;
  out.degree -= l;
  return out;
}

VeroneseSpec scaled_spec(const VeroneseSpec& spec, int k) {
  VeroneseSpec out = spec;
  for (int& b : out.bounds) b *= k;
  out.degree *= k;
  return out;
}

} // namespace

MonomialIdeal veronese_layer(const VeroneseSpec& spec, int layer) {
  require_standing(spec, "veronese_layer");
  if (layer < 0) throw NotApplicable("veronese_layer: layer must be >= 0");
  return veronese_ideal(shifted_spec(spec, layer));
}

long long sat_veronese(const VeroneseSpec& spec) {
  require_standing(spec, "sat_veronese");
  const int n = spec.dim();
  if (n == 1) return spec.degree; // principal (x1^d)
  long long surplus = spec.bound_sum() - spec.degree;
  return std::min({surplus / (n - 1), static_cast<long long>(spec.bounds.back()),
                   static_cast<long long>(spec.degree)});
}

long long sat_veronese_power(const VeroneseSpec& spec, long long k) {
  require_standing(spec, "sat_veronese_power");
  if (k < 1) throw NotApplicable("sat_veronese_power: k must be positive");
  const int n = spec.dim();
  if (n == 1) return k * spec.degree;
  long long surplus = spec.bound_sum() - spec.degree;
  return std::min({surplus * k / (n - 1), k * spec.bounds.back(),
                   k * static_cast<long long>(spec.degree)});
}

bool veronese_power_identity(const VeroneseSpec& spec, int k) {
  if (k < 0) throw NotApplicable("veronese_power_identity: k must be >= 0");
  return power(veronese_ideal(spec), k) == veronese_ideal(scaled_spec(spec, k));
}

bool veronese_colon_identity(const VeroneseSpec& spec) {
  MonomialIdeal ideal = veronese_ideal(spec);
  return colon_max(ideal) == sum(ideal, veronese_ideal(shifted_spec(spec, 1)));
}

QuasiLinearForm quasilinear(const VeroneseSpec& spec) {
  require_standing(spec, "quasilinear");
  const int n = spec.dim();
  QuasiLinearForm form;
  if (n == 1) {
    form.period = 1;
    form.pieces = {{Rational(spec.degree), Rational(0)}};
    return form;
  }
  Rational s(spec.bound_sum() - spec.degree, n - 1);
  Rational last(spec.bounds.back());
  Rational deg(spec.degree);

  // Ties resolve to the period-1 branches; where branches overlap the
  // formulas agree, asserted below on one full period.
  if (last <= s && last <= deg) {
    form.period = 1;
    form.pieces = {{last, Rational(0)}};
  } else if (deg <= s && deg <= last) {
    form.period = 1;
    form.pieces = {{deg, Rational(0)}};
  } else {
    form.period = n - 1;
    for (int i = 0; i < n - 1; ++i) {
      Rational si = s * Rational(i);
      form.pieces.emplace_back(s, Rational(si.floor()) - si);
    }
  }
  for (long long k = 1; k <= 2 * form.period; ++k) {
    if (form.evaluate(k) != sat_veronese_power(spec, k)) {
      throw NotApplicable("quasilinear: branch disagreement at k=" + std::to_string(k));
    }
  }
  return form;
}

} // namespace satmon
