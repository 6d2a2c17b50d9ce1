#include "satmon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "satmon/borel.hpp"
#include "satmon/io.hpp"
#include "satmon/saturation.hpp"

namespace satmon {

namespace {

// Brute-force power saturation is skipped above this generator count in the
// grid sweeps; the closed formulas are still checked everywhere.
constexpr long long kPowerBruteGenCap = 800;

Monomial random_monomial(SplitMix64& rng, int n, int degree, const BoundVector* bound) {
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < degree; ++step) {
    std::vector<int> open;
    for (int i = 0; i < n; ++i) {
      if (bound == nullptr || exps[static_cast<std::size_t>(i)] <
                                  bound->entries()[static_cast<std::size_t>(i)]) {
        open.push_back(i);
      }
    }
    if (open.empty()) break;
    exps[static_cast<std::size_t>(open[rng.next_below(open.size())])] += 1;
  }
  return Monomial(std::move(exps));
}

int bound_room(const BoundVector& c) {
  int room = 0;
  for (int b : c.entries()) room += std::max(0, b);
  return room;
}

MonomialIdeal random_closed(SplitMix64& rng, const RandomIdealParams& p, bool stable) {
  int seed_count = 1 + static_cast<int>(rng.next_below(
                           static_cast<std::uint64_t>(std::max(1, p.max_seeds))));
  int shared_deg = rng.next_int(1, std::max(1, p.deg_max));
  if (p.bound != nullptr) shared_deg = std::min(shared_deg, bound_room(*p.bound));
  std::vector<Monomial> seeds;
  seeds.reserve(static_cast<std::size_t>(seed_count));
  for (int s = 0; s < seed_count; ++s) {
    int deg = p.equigenerated ? shared_deg : rng.next_int(1, std::max(1, p.deg_max));
    seeds.push_back(random_monomial(rng, p.n, deg, p.bound));
  }
  if (p.bound != nullptr) {
    return stable ? bounded_stable_closure(seeds, *p.bound, p.n)
                  : bounded_borel_closure(seeds, *p.bound, p.n);
  }
  return stable ? stable_closure(seeds, p.n) : borel_closure(seeds, p.n);
}

BoundVector random_bound(SplitMix64& rng, int n, int bound_max, bool nonzero) {
  std::vector<int> b(static_cast<std::size_t>(n), 0);
  for (int& e : b) e = rng.next_int(0, std::max(0, bound_max));
  if (nonzero && std::all_of(b.begin(), b.end(), [](int e) { return e == 0; })) {
    b[0] = 1;
  }
  return BoundVector(std::move(b));
}

struct TrialOutcome {
  std::vector<std::string> problems;
  nlohmann::json instance;
  std::vector<std::string> notes;
};

void expect(TrialOutcome& out, bool ok, const std::string& message) {
  if (!ok) out.problems.push_back(message);
}

VerifyReport run_parallel(const VerifyConfig& cfg, int count,
                          const std::function<TrialOutcome(int)>& body) {
  VerifyReport report;
  report.suite = cfg.suite;
  report.trials_run = count;
  auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(count));
  const long long total = count;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long t = 0; t < total; ++t) {
    auto& slot = outcomes[static_cast<std::size_t>(t)];
    try {
      slot = body(static_cast<int>(t));
    } catch (const std::exception& e) {
      slot.problems.push_back(std::string("exception: ") + e.what());
    }
  }
  for (int t = 0; t < count; ++t) {
    auto& slot = outcomes[static_cast<std::size_t>(t)];
    if (!slot.problems.empty()) {
      std::string joined;
      for (const auto& p : slot.problems) {
        if (!joined.empty()) joined += "; ";
        joined += p;
      }
      report.failures.push_back({t, std::move(joined), std::move(slot.instance)});
    }
    for (auto& note : slot.notes) report.notes.push_back(std::move(note));
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

MonomialIdeal colon_max_by_intersection(const MonomialIdeal& I) {
  MonomialIdeal acc = colon_var(I, 1);
  for (int var = 2; var <= I.dim(); ++var) {
    acc = intersect(acc, colon_var(I, var));
  }
  return acc;
}

// ---- suites ---------------------------------------------------------------

VerifyReport suite_proffind(const VerifyConfig& cfg) {
  return run_parallel(cfg, cfg.trials, [&](int trial) {
    SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
    RandomIdealParams p;
    p.n = rng.next_int(1, std::max(1, cfg.n_max));
    p.deg_max = cfg.deg_max;
    p.equigenerated = rng.next_below(2) == 0;
    MonomialIdeal I = random_strongly_stable(rng, p);
    TrialOutcome out;
    out.instance = {{"ideal", ideal_to_json(I)}};
    SaturationReport report = saturate(I);
    int formula = sat_strongly_stable_formula(I);
    expect(out, formula == report.sat,
           "formula " + std::to_string(formula) + " != brute sat " + std::to_string(report.sat));
    if (I.dim() > 1) {
      expect(out, colon_var(I, I.dim()) == colon_max_by_intersection(I),
             "I : x_n differs from the intersection of variable colons");
    }
    return out;
  });
}

VerifyReport suite_socle(const VerifyConfig& cfg) {
  return run_parallel(cfg, cfg.trials, [&](int trial) {
    SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
    int n = rng.next_int(1, std::max(1, cfg.n_max));
    BoundVector c = random_bound(rng, n, cfg.bound_max, true);
    RandomIdealParams p;
    p.n = n;
    p.deg_max = cfg.deg_max;
    p.equigenerated = true;
    p.bound = &c;
    MonomialIdeal I = random_stable(rng, p);
    TrialOutcome out;
    out.instance = {{"ideal", ideal_to_json(I)}, {"bound", c.entries()}};
    MonomialIdeal socle = socle_equigen_bounded(I, c);
    expect(out, colon_max(I) == sum(I, socle), "I : m != I + J");
    if (!socle.is_zero()) {
      int d = total_degree(I.gens().front());
      for (const auto& g : socle.gens()) {
        expect(out, total_degree(g) == d - 1, "socle generator degree != d - 1");
      }
    }
    if (is_bounded_strongly_stable(I, c)) {
      expect(out, is_bounded_strongly_stable(socle, c.shifted(1)),
             "strongly stable case: J is not (c-e)-bounded strongly stable");
    }
    return out;
  });
}

VerifyReport suite_sat_formula(const VerifyConfig& cfg) {
  return run_parallel(cfg, cfg.trials, [&](int trial) {
    SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
    int n = rng.next_int(1, std::max(1, cfg.n_max));
    BoundVector c = random_bound(rng, n, cfg.bound_max, true);
    RandomIdealParams p;
    p.n = n;
    p.deg_max = cfg.deg_max;
    p.equigenerated = true;
    p.bound = &c;
    MonomialIdeal I = random_strongly_stable(rng, p);
    TrialOutcome out;
    out.instance = {{"ideal", ideal_to_json(I)}, {"bound", c.entries()}};
    SaturationReport report = saturate(I);
    int formula = sat_equigen_bounded_formula(I, c);
    expect(out, formula == report.sat,
           "formula " + std::to_string(formula) + " != brute sat " + std::to_string(report.sat));
    expect(out, colon_max(I) == sum(I, socle_equigen_bounded(I, c)), "I : m != I + J");
    for (int l = 1; l < static_cast<int>(report.layers.size()); ++l) {
      MonomialIdeal closed = layer_formula_equigen(I, c, l);
      expect(out, closed == report.layers[static_cast<std::size_t>(l)],
             "layer formula differs from chain layer at l=" + std::to_string(l));
      if (!closed.is_zero()) {
        expect(out, is_bounded_strongly_stable(closed, c.shifted(l)),
               "layer " + std::to_string(l) + " is not shifted-bounded strongly stable");
      }
    }
    return out;
  });
}

VerifyReport suite_subadditivity(const VerifyConfig& cfg) {
  return run_parallel(cfg, cfg.trials, [&](int trial) {
    SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
    TrialOutcome out;
    MonomialIdeal I, J;
    if (trial == 0) {
      // Pinned witness of strict inequality: sat(I) = sat(J) = 2, sat(IJ) = 3.
      I = borel_closure({parse_monomial("x2^2*x3^2", 3), parse_monomial("x1*x3", 3)}, 3);
      J = borel_closure({parse_monomial("x1*x3^2", 3), parse_monomial("x2^2*x3", 3)}, 3);
    } else {
      RandomIdealParams p;
      p.n = rng.next_int(1, std::max(1, cfg.n_max));
      p.deg_max = cfg.deg_max;
      p.equigenerated = rng.next_below(2) == 0;
      I = random_strongly_stable(rng, p);
      p.equigenerated = rng.next_below(2) == 0;
      J = random_strongly_stable(rng, p);
    }
    out.instance = {{"ideal", ideal_to_json(I)}, {"other", ideal_to_json(J)}};
    MonomialIdeal prod = product(I, J);
    expect(out, is_strongly_stable(prod), "product of strongly stable ideals is not strongly stable");
    int sat_i = saturate(I).sat;
    int sat_j = saturate(J).sat;
    int sat_ij = saturate(prod).sat;
    expect(out, sat_strongly_stable_formula(I) == sat_i, "formula/brute mismatch on I");
    expect(out, sat_strongly_stable_formula(J) == sat_j, "formula/brute mismatch on J");
    expect(out, sat_strongly_stable_formula(prod) == sat_ij, "formula/brute mismatch on IJ");
    expect(out, sat_ij <= sat_i + sat_j,
           "sat(IJ) = " + std::to_string(sat_ij) + " exceeds sat(I) + sat(J) = " +
               std::to_string(sat_i + sat_j));
    if (!I.is_zero() && !J.is_zero() && is_equigenerated(I) && is_equigenerated(J)) {
      expect(out, sat_ij == sat_i + sat_j, "equigenerated pair without additivity");
    }
    if (trial == 0) {
      expect(out, sat_i == 2 && sat_j == 2 && sat_ij == 3,
             "pinned instance expected sats 2, 2, 3; got " + std::to_string(sat_i) + ", " +
                 std::to_string(sat_j) + ", " + std::to_string(sat_ij));
    }
    return out;
  });
}

VerifyReport suite_layers_jk(const VerifyConfig& cfg) {
  return run_parallel(cfg, cfg.trials, [&](int trial) {
    SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
    RandomIdealParams p;
    p.n = rng.next_int(1, std::max(1, cfg.n_max));
    p.deg_max = cfg.deg_max;
    p.equigenerated = rng.next_below(2) == 0;
    MonomialIdeal I = random_strongly_stable(rng, p);
    TrialOutcome out;
    out.instance = {{"ideal", ideal_to_json(I)}};
    SaturationReport report = saturate(I);
    MonomialIdeal fold = report.layers.front();
    expect(out, fold == report.chain.front(), "layer 0 differs from I");
    for (std::size_t l = 1; l < report.chain.size(); ++l) {
      fold = sum(fold, report.layers[l]);
      expect(out, fold == report.chain[l],
             "sum of layers 0.." + std::to_string(l) + " differs from chain entry");
    }
    for (std::size_t l = 1; l < report.layers.size(); ++l) {
      bool nonzero = !report.layers[l].is_zero();
      expect(out, nonzero == (static_cast<int>(l) <= report.sat),
             "layer " + std::to_string(l) + " vanishing does not match sat");
    }
    if (is_equigenerated(I) && !I.is_zero()) {
      int d = total_degree(I.gens().front());
      for (int l = 0; l <= report.sat; ++l) {
        const MonomialIdeal& layer = report.layers[static_cast<std::size_t>(l)];
        expect(out, colon_max(layer) == sum(layer, report.layers[static_cast<std::size_t>(l) + 1]),
               "J_l : m != J_l + J_{l+1} at l=" + std::to_string(l));
        for (const auto& g : layer.gens()) {
          expect(out, total_degree(g) == d - l, "layer generator degree != d - l");
        }
      }
    }
    return out;
  });
}

VerifyReport suite_soclepower(const VerifyConfig& cfg) {
  return run_parallel(cfg, cfg.trials, [&](int trial) {
    SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
    int n = rng.next_int(1, std::max(1, cfg.n_max));
    BoundVector c = random_bound(rng, n, cfg.bound_max, true);
    int deg = std::min(rng.next_int(1, std::max(1, cfg.deg_max)), bound_room(c));
    deg = std::max(deg, 1);
    Monomial u = random_monomial(rng, n, deg, &c);
    TrialOutcome out;
    out.instance = {{"seed", u.exps()}, {"bound", c.entries()}};
    MonomialIdeal I = bounded_borel_closure({u}, c, n);
    for (int k = 1; k <= std::max(1, cfg.k_max); ++k) {
      MonomialIdeal via_closure = principal_power(u, c, k);
      expect(out, via_closure == power(I, k),
             "B^{kc}(u^k) != B^c(u)^k at k=" + std::to_string(k));
      SaturationReport report = saturate(via_closure);
      MonomialIdeal socle_side =
          u.exp(n) >= 1 ? sum(via_closure, principal_power_layer(u, c, k, 1)) : via_closure;
      expect(out, colon_max(via_closure) == socle_side,
             "I^k : m mismatch at k=" + std::to_string(k));
      Monomial uk = pow(u, k);
      int layer_hi = std::min(uk.exp(n), report.sat + 1);
      for (int l = 0; l <= layer_hi; ++l) {
        expect(out,
               principal_power_layer(u, c, k, l) == report.layers[static_cast<std::size_t>(l)],
               "layer closure mismatch at k=" + std::to_string(k) + " l=" + std::to_string(l));
      }
      expect(out, sat_principal_power(u, c, k) == report.sat,
             "power sat formula mismatch at k=" + std::to_string(k));
    }
    return out;
  });
}

void enumerate_nonincreasing(int n, int max_entry, std::vector<int>& current,
                             const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(current.size()) == n) {
    emit(current);
    return;
  }
  int hi = current.empty() ? max_entry : current.back();
  for (int v = hi; v >= 0; --v) {
    current.push_back(v);
    enumerate_nonincreasing(n, max_entry, current, emit);
    current.pop_back();
  }
}

std::vector<VeroneseSpec> standing_grid(const VerifyConfig& cfg) {
  std::vector<VeroneseSpec> cells;
  for (int n = 2; n <= std::max(2, cfg.n_max); ++n) {
    std::vector<int> current;
    enumerate_nonincreasing(n, cfg.bound_max, current, [&](const std::vector<int>& a) {
      long long total = 0;
      for (int v : a) total += v;
      for (int d = 0; d <= cfg.deg_max && d <= total; ++d) {
        cells.push_back({a, d});
      }
    });
  }
  return cells;
}

VerifyReport suite_veronese(const VerifyConfig& cfg) {
  std::vector<VeroneseSpec> cells = standing_grid(cfg);

  // Vanishing-criterion cells: full sign/order grid, enumeration as oracle.
  std::vector<VeroneseSpec> vanish_cells;
  for (int n = 2; n <= std::max(2, cfg.n_max); ++n) {
    int hi = std::min(3, cfg.bound_max);
    std::vector<int> a(static_cast<std::size_t>(n), -1);
    for (;;) {
      for (int d = -1; d <= cfg.deg_max; ++d) vanish_cells.push_back({a, d});
      int slot = 0;
      while (slot < n && a[static_cast<std::size_t>(slot)] == hi) {
        a[static_cast<std::size_t>(slot)] = -1;
        ++slot;
      }
      if (slot == n) break;
      a[static_cast<std::size_t>(slot)] += 1;
    }
  }

  const int standing_count = static_cast<int>(cells.size());
  const int total = standing_count + static_cast<int>(vanish_cells.size());
  return run_parallel(cfg, total, [&](int trial) {
    TrialOutcome out;
    if (trial >= standing_count) {
      const VeroneseSpec& spec = vanish_cells[static_cast<std::size_t>(trial - standing_count)];
      out.instance = {{"a", spec.bounds}, {"d", spec.degree}, {"check", "vanishing"}};
      expect(out, veronese_is_zero(spec) == veronese_ideal(spec).is_zero(),
             "vanishing criterion disagrees with enumeration");
      return out;
    }
    const VeroneseSpec& spec = cells[static_cast<std::size_t>(trial)];
    out.instance = {{"a", spec.bounds}, {"d", spec.degree}};
    MonomialIdeal I = veronese_ideal(spec);
    expect(out, is_bounded_strongly_stable(I, BoundVector(spec.bounds)),
           "Veronese ideal is not a-bounded strongly stable");
    SaturationReport report = saturate(I);
    expect(out, sat_veronese(spec) == report.sat, "closed-form sat != brute sat");
    for (int l = 0; l <= report.sat + 1; ++l) {
      expect(out,
             veronese_layer(spec, l) == report.layers[static_cast<std::size_t>(l)],
             "layer " + std::to_string(l) + " differs from shifted Veronese ideal");
    }
    expect(out, veronese_colon_identity(spec), "colon identity fails");
    if (cfg.k_max >= 1) {
      int k_hi = spec.dim() == 2 ? std::max(cfg.k_max, 5) : cfg.k_max;
      for (int k = 2; k <= k_hi; ++k) {
        VeroneseSpec scaled = spec;
        for (int& b : scaled.bounds) b *= k;
        scaled.degree *= k;
        expect(out, veronese_power_identity(spec, k),
               "I^k != I_{ka,n,kd} at k=" + std::to_string(k));
        if (count_veronese_gens(scaled) <= kPowerBruteGenCap) {
          expect(out,
                 sat_veronese_power(spec, k) == saturate(veronese_ideal(scaled)).sat,
                 "power sat formula != brute at k=" + std::to_string(k));
        }
      }
    }
    return out;
  });
}

VerifyReport suite_quasilinear(const VerifyConfig& cfg) {
  std::vector<VeroneseSpec> cells = standing_grid(cfg);
  return run_parallel(cfg, static_cast<int>(cells.size()), [&](int trial) {
    const VeroneseSpec& spec = cells[static_cast<std::size_t>(trial)];
    TrialOutcome out;
    out.instance = {{"a", spec.bounds}, {"d", spec.degree}};
    QuasiLinearForm form = quasilinear(spec);
    for (long long k = 1; k <= 20; ++k) {
      expect(out, form.evaluate(k) == sat_veronese_power(spec, k),
             "quasi-linear form differs from closed form at k=" + std::to_string(k));
    }
    for (int k = 1; k <= std::min(3, cfg.k_max); ++k) {
      VeroneseSpec scaled = spec;
      for (int& b : scaled.bounds) b *= k;
      scaled.degree *= k;
      if (count_veronese_gens(scaled) <= kPowerBruteGenCap) {
        expect(out, form.evaluate(k) == saturate(veronese_ideal(scaled)).sat,
               "quasi-linear form differs from brute sat at k=" + std::to_string(k));
      }
    }
    return out;
  });
}

VerifyReport suite_stable_conjecture(const VerifyConfig& cfg) {
  struct Tally {
    int stable_only = 0;
    int stable_only_agree = 0;
    int strongly = 0;
    int strongly_agree = 0;
  };
  std::vector<Tally> tallies(static_cast<std::size_t>(cfg.trials));
  std::vector<std::string> disagreements(static_cast<std::size_t>(cfg.trials));
  VerifyReport report = run_parallel(cfg, cfg.trials, [&](int trial) {
    SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
    int n = rng.next_int(1, std::max(1, cfg.n_max));
    BoundVector c = random_bound(rng, n, cfg.bound_max, true);
    RandomIdealParams p;
    p.n = n;
    p.deg_max = cfg.deg_max;
    p.equigenerated = true;
    p.bound = &c;
    MonomialIdeal I = random_stable(rng, p);
    TrialOutcome out;
    int brute = saturate(I).sat;
    int naive = bounded_witness_depth(I, c);
    Tally& tally = tallies[static_cast<std::size_t>(trial)];
    if (is_bounded_strongly_stable(I, c)) {
      tally.strongly = 1;
      tally.strongly_agree = brute == naive ? 1 : 0;
    } else {
      tally.stable_only = 1;
      tally.stable_only_agree = brute == naive ? 1 : 0;
    }
    if (brute != naive) {
      nlohmann::json instance = {{"ideal", ideal_to_json(I)},
                                 {"bound", c.entries()},
                                 {"brute", brute},
                                 {"witness_depth", naive}};
      disagreements[static_cast<std::size_t>(trial)] = instance.dump();
    }
    return out; // observational: never a failure
  });
  Tally total;
  for (const auto& t : tallies) {
    total.stable_only += t.stable_only;
    total.stable_only_agree += t.stable_only_agree;
    total.strongly += t.strongly;
    total.strongly_agree += t.strongly_agree;
  }
  report.notes.push_back("stable-but-not-strongly-stable instances: " +
                         std::to_string(total.stable_only) + ", witness-depth formula agreed on " +
                         std::to_string(total.stable_only_agree));
  report.notes.push_back("strongly stable instances (formula known to hold): " +
                         std::to_string(total.strongly) + ", agreed on " +
                         std::to_string(total.strongly_agree));
  int shown = 0;
  for (const auto& d : disagreements) {
    if (!d.empty() && shown < 5) {
      report.notes.push_back("disagreement: " + d);
      ++shown;
    }
  }
  if (shown == 0) {
    report.notes.push_back("no disagreements observed; the open question stays open");
  }
  return report;
}

} // namespace

MonomialIdeal random_strongly_stable(SplitMix64& rng, const RandomIdealParams& params) {
  return random_closed(rng, params, false);
}

MonomialIdeal random_stable(SplitMix64& rng, const RandomIdealParams& params) {
  return random_closed(rng, params, true);
}

VerifyReport run_suite(const VerifyConfig& cfg) {
  if (cfg.suite == "proffind") return suite_proffind(cfg);
  if (cfg.suite == "socle") return suite_socle(cfg);
  if (cfg.suite == "sat-formula") return suite_sat_formula(cfg);
  if (cfg.suite == "subadditivity") return suite_subadditivity(cfg);
  if (cfg.suite == "layers-jk") return suite_layers_jk(cfg);
  if (cfg.suite == "soclepower") return suite_soclepower(cfg);
  if (cfg.suite == "veronese") return suite_veronese(cfg);
  if (cfg.suite == "quasilinear") return suite_quasilinear(cfg);
  if (cfg.suite == "stable-conjecture") return suite_stable_conjecture(cfg);
  throw NotApplicable("unknown suite '" + cfg.suite + "'");
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"trial", f.trial}, {"message", f.message}, {"instance", f.instance}});
  }
  return {{"suite", report.suite},
          {"trials", report.trials_run},
          {"failures", std::move(failures)},
          {"notes", report.notes}};
}

std::string report_to_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << ": " << report.trials_run << " trials, "
      << report.failures.size() << " failures\n";
  for (const auto& f : report.failures) {
    out << "failure at trial " << f.trial << ": " << f.message << "\n";
    out << "  instance: " << f.instance.dump() << "\n";
  }
  for (const auto& note : report.notes) {
    out << "note: " << note << "\n";
  }
  return out.str();
}

// ---- pinned fixtures -------------------------------------------------------

namespace {

struct Fixture {
  std::string name;
  std::function<void(TrialOutcome&)> check;
};

MonomialIdeal ideal3(const std::string& text) { return parse_ideal_text(text, 3); }
MonomialIdeal ideal4(const std::string& text) { return parse_ideal_text(text, 4); }

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> list = {
      {"squarefree-power",
       [](TrialOutcome& out) {
         MonomialIdeal I = ideal3("x1*x2, x1*x3, x2*x3");
         out.instance = {{"ideal", ideal_to_json(I)}};
         expect(out, saturate(I).sat == 0, "sat(I) != 0");
         MonomialIdeal square = power(I, 2);
         expect(out,
                square == ideal3("x1^2*x2^2, x1^2*x2*x3, x1*x2^2*x3, x1^2*x3^2, "
                                 "x1*x2*x3^2, x2^2*x3^2"),
                "I^2 generators differ");
         expect(out, saturate(square).sat == 1, "sat(I^2) != 1");
         expect(out, !is_strongly_stable(I), "I unexpectedly strongly stable");
         BoundVector e3 = BoundVector::uniform(3, 1);
         expect(out, is_bounded_strongly_stable(I, e3), "I not squarefree strongly stable");
         expect(out, sat_equigen_bounded_formula(I, e3) == 0, "bounded formula != 0 on I");
         expect(out, sat_equigen_bounded_formula(square, BoundVector::uniform(3, 2)) == 1,
                "bounded formula != 1 on I^2");
       }},
      {"funny-product",
       [](TrialOutcome& out) {
         MonomialIdeal I =
             borel_closure({parse_monomial("x2^2*x3^2", 3), parse_monomial("x1*x3", 3)}, 3);
         MonomialIdeal J =
             borel_closure({parse_monomial("x1*x3^2", 3), parse_monomial("x2^2*x3", 3)}, 3);
         out.instance = {{"ideal", ideal_to_json(I)}, {"other", ideal_to_json(J)}};
         expect(out, saturate(I).sat == 2, "sat(I) != 2");
         expect(out, saturate(J).sat == 2, "sat(J) != 2");
         expect(out, saturate(product(I, J)).sat == 3, "sat(IJ) != 3");
       }},
      {"cocoa",
       [](TrialOutcome& out) {
         MonomialIdeal I = ideal3("x1, x2^4, x2^3*x3, x2^2*x3^2");
         out.instance = {{"ideal", ideal_to_json(I)}};
         BoundVector c(std::vector<int>{1, 4, 2});
         expect(out, is_bounded_strongly_stable(I, c), "I not (1,4,2)-bounded strongly stable");
         expect(out, !is_equigenerated(I), "I unexpectedly equigenerated");
         expect(out, saturate(I).sat == 2, "sat(I) != 2");
         expect(out, bounded_witness_depth(I, c) == 1,
                "witness depth != 1 (the formula must fail here)");
         bool threw = false;
         try {
           sat_equigen_bounded_formula(I, c);
         } catch (const NotApplicable&) {
           threw = true;
         }
         expect(out, threw, "formula did not refuse a non-equigenerated ideal");
       }},
      {"stable-socle",
       [](TrialOutcome& out) {
         MonomialIdeal I = ideal3("x1^3, x1^2*x2, x1*x2^2, x1*x2*x3");
         out.instance = {{"ideal", ideal_to_json(I)}};
         BoundVector c(std::vector<int>{3, 2, 1});
         expect(out, is_bounded_stable(I, c), "I not (3,2,1)-bounded stable");
         expect(out, !is_bounded_strongly_stable(I, c), "I unexpectedly strongly stable");
         MonomialIdeal socle = socle_equigen_bounded(I, c);
         expect(out, socle == ideal3("x1*x2"), "socle J != (x1 x2)");
         expect(out, colon_max(I) == sum(I, socle), "I : m != I + J");
         expect(out, !is_bounded_stable(socle, c.shifted(1)),
                "J unexpectedly (c-e)-bounded stable (x1^2 is missing)");
       }},
      {"product-ten",
       [](TrialOutcome& out) {
         MonomialIdeal I = ideal4("x1*x2, x1*x3, x1*x4, x2*x3");
         out.instance = {{"ideal", ideal_to_json(I)}};
         MonomialIdeal square = power(I, 2);
         expect(out,
                square == ideal4("x1^2*x2^2, x1^2*x2*x3, x1^2*x2*x4, x1*x2^2*x3, x1^2*x3^2, "
                                 "x1^2*x3*x4, x1*x2*x3^2, x1^2*x4^2, x1*x2*x3*x4, x2^2*x3^2"),
                "I^2 differs from the ten printed generators");
         expect(out, is_bounded_strongly_stable(I, BoundVector::uniform(4, 1)),
                "I not e-bounded strongly stable");
         expect(out, !is_bounded_strongly_stable(square, BoundVector::uniform(4, 2)),
                "I^2 unexpectedly 2e-bounded strongly stable");
         expect(out, !contains(square, parse_monomial("x1*x2^2*x4", 4)),
                "x1 x2^2 x4 unexpectedly lies in I^2");
       }},
      {"stable-power",
       [](TrialOutcome& out) {
         Monomial u = parse_monomial("x1*x2*x3", 3);
         BoundVector c = BoundVector::uniform(3, 2);
         MonomialIdeal S = bounded_stable_closure({u}, c, 3);
         out.instance = {{"ideal", ideal_to_json(S)}};
         expect(out, S == ideal3("x1^2*x2, x1*x2^2, x1*x2*x3"), "stable closure differs");
         MonomialIdeal square = power(S, 2);
         expect(out,
                square == ideal3("x1^4*x2^2, x1^3*x2^3, x1^2*x2^4, x1^3*x2^2*x3, "
                                 "x1^2*x2^3*x3, x1^2*x2^2*x3^2"),
                "stable closure square differs");
         MonomialIdeal strongly = bounded_borel_closure({pow(u, 2)}, c.scaled(2), 3);
         expect(out,
                strongly == ideal3("x1^4*x2^2, x1^3*x2^3, x1^2*x2^4, x1^3*x2^2*x3, "
                                   "x1^2*x2^3*x3, x1^2*x2^2*x3^2, x1^4*x3^2, x1^3*x2*x3^2, "
                                   "x1^4*x2*x3"),
                "B^{2c}(u^2) differs from the nine printed generators");
         expect(out, square != strongly, "the power identity unexpectedly held for stable closures");
       }},
      {"borel-product",
       [](TrialOutcome& out) {
         BoundVector c = BoundVector::uniform(3, 2);
         MonomialIdeal left = bounded_borel_closure({parse_monomial("x1*x2^2", 3)}, c, 3);
         MonomialIdeal right = bounded_borel_closure({parse_monomial("x1*x3^2", 3)}, c, 3);
         MonomialIdeal prod = product(left, right);
         out.instance = {{"ideal", ideal_to_json(prod)}};
         expect(out,
                prod == ideal3("x1^4*x2^2, x1^3*x2^3, x1^2*x2^4, x1^4*x2*x3, x1^3*x2^2*x3, "
                               "x1^2*x2^3*x3, x1^3*x2*x3^2, x1^2*x2^2*x3^2"),
                "B^c(u1) B^c(u2) differs from the printed generators");
         MonomialIdeal joint =
             bounded_borel_closure({parse_monomial("x1^2*x2^2*x3^2", 3)}, c.scaled(2), 3);
         expect(out,
                joint == ideal3("x1^4*x3^2, x1^4*x2^2, x1^3*x2^3, x1^2*x2^4, x1^4*x2*x3, "
                                "x1^3*x2^2*x3, x1^2*x2^3*x3, x1^3*x2*x3^2, x1^2*x2^2*x3^2"),
                "B^{2c}(u1 u2) differs from the printed generators");
         expect(out, prod != joint, "product unexpectedly equals the joint closure");
       }},
      {"veronese-product",
       [](TrialOutcome& out) {
         VeroneseSpec a{{3, 3, 1, 2}, 6};
         VeroneseSpec b{{2, 2, 0, 1}, 5};
         VeroneseSpec c{{5, 5, 1, 3}, 11};
         MonomialIdeal Ia = veronese_ideal(a);
         MonomialIdeal Ib = veronese_ideal(b);
         MonomialIdeal Ic = veronese_ideal(c);
         out.instance = {{"a", a.bounds}, {"d1", a.degree}, {"b", b.bounds}, {"d2", b.degree}};
         expect(out,
                Ia == ideal4("x1^3*x2^3, x1^3*x2^2*x3, x1^2*x2^3*x3, x1^3*x2^2*x4, "
                             "x1^2*x2^3*x4, x1^3*x2*x3*x4, x1^2*x2^2*x3*x4, x1*x2^3*x3*x4, "
                             "x1^3*x2*x4^2, x1^2*x2^2*x4^2, x1*x2^3*x4^2, x1^3*x3*x4^2, "
                             "x1^2*x2*x3*x4^2, x1*x2^2*x3*x4^2, x2^3*x3*x4^2"),
                "I_{a,4,6} differs from the printed generators");
         expect(out, Ib == ideal4("x1^2*x2^2*x4"), "I_{b,4,5} differs");
         MonomialIdeal prod = product(Ia, Ib);
         expect(out,
                prod == ideal4("x1^5*x2^5*x4, x1^5*x2^4*x3*x4, x1^4*x2^5*x3*x4, "
                               "x1^5*x2^3*x3*x4^2, x1^4*x2^4*x3*x4^2, x1^3*x2^5*x3*x4^2, "
                               "x1^5*x2^3*x4^3, x1^4*x2^4*x4^3, x1^3*x2^5*x4^3, "
                               "x1^5*x2^2*x3*x4^3, x1^4*x2^3*x3*x4^3, x1^3*x2^4*x3*x4^3, "
                               "x1^2*x2^5*x3*x4^3, x1^3*x2^5*x3*x4^2, x1^5*x2^4*x4^2, "
                               "x1^4*x2^5*x4^2"),
                "product differs from the printed generators");
         expect(out,
                Ic == ideal4("x1^5*x2^5*x3, x1^5*x2^5*x4, x1^5*x2^4*x3*x4, x1^4*x2^5*x3*x4, "
                             "x1^5*x2^3*x3*x4^2, x1^4*x2^4*x3*x4^2, x1^3*x2^5*x3*x4^2, "
                             "x1^5*x2^3*x4^3, x1^4*x2^4*x4^3, x1^3*x2^5*x4^3, "
                             "x1^5*x2^2*x3*x4^3, x1^4*x2^3*x3*x4^3, x1^3*x2^4*x3*x4^3, "
                             "x1^2*x2^5*x3*x4^3, x1^3*x2^5*x3*x4^2, x1^5*x2^4*x4^2, "
                             "x1^4*x2^5*x4^2"),
                "I_{a+b,4,11} differs from the printed generators");
         expect(out, prod != Ic, "product unexpectedly equals the Veronese ideal of the sum");
         expect(out, sum(prod, ideal4("x1^5*x2^5*x3")) == Ic,
                "the gap is not exactly the printed missing generator");
         expect(out, !contains(prod, parse_monomial("x1^5*x2^5*x3", 4)),
                "missing generator unexpectedly contained in the product");
       }},
      {"mixed-degree-socle",
       [](TrialOutcome& out) {
         MonomialIdeal I = ideal3("x1^3, x1^2*x2^2, x1^2*x2*x3, x1^2*x3^2");
         out.instance = {{"ideal", ideal_to_json(I)}};
         BoundVector c(std::vector<int>{3, 2, 2});
         expect(out, is_bounded_strongly_stable(I, c), "I not (3,2,2)-bounded strongly stable");
         expect(out, !is_equigenerated(I), "I unexpectedly equigenerated");
         SaturationReport report = saturate(I);
         expect(out, report.layers.size() > 1 &&
                         report.layers[1] == ideal3("x1^2*x2, x1^2*x3"),
                "J_1(I) != (x1^2 x2, x1^2 x3)");
       }},
  };
  return list;
}

} // namespace

VerifyReport run_fixtures() {
  VerifyReport report;
  report.suite = "fixtures";
  auto start = std::chrono::steady_clock::now();
  int index = 0;
  for (const auto& fixture : fixtures()) {
    TrialOutcome out;
    try {
      fixture.check(out);
    } catch (const std::exception& e) {
      out.problems.push_back(std::string("exception: ") + e.what());
    }
    if (!out.problems.empty()) {
      std::string joined;
      for (const auto& p : out.problems) {
        if (!joined.empty()) joined += "; ";
        joined += p;
      }
      report.failures.push_back({index, fixture.name + ": " + joined, out.instance});
    }
    report.notes.push_back("fixture " + fixture.name + ": " +
                           (out.problems.empty() ? "ok" : "FAILED"));
    ++index;
  }
  report.trials_run = index;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---- tables ---------------------------------------------------------------

namespace {

struct TableRow {
  long long k = 0;
  std::optional<long long> brute;
  std::optional<long long> formula;
  std::optional<long long> quasi;
  bool match = true;
};

std::string cell(const std::optional<long long>& v) {
  return v.has_value() ? std::to_string(*v) : "-";
}

std::string render_rows(const std::vector<TableRow>& rows, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::Csv: {
      out << "k,sat_bruteforce,sat_formula,quasilinear,match\n";
      for (const auto& r : rows) {
        out << r.k << ',' << cell(r.brute) << ',' << cell(r.formula) << ',' << cell(r.quasi)
            << ',' << (r.match ? "yes" : "no") << "\n";
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::json array = nlohmann::json::array();
      for (const auto& r : rows) {
        nlohmann::json row = {{"k", r.k}, {"match", r.match}};
        row["sat_bruteforce"] = r.brute.has_value() ? nlohmann::json(*r.brute) : nlohmann::json();
        row["sat_formula"] = r.formula.has_value() ? nlohmann::json(*r.formula) : nlohmann::json();
        row["quasilinear"] = r.quasi.has_value() ? nlohmann::json(*r.quasi) : nlohmann::json();
        array.push_back(std::move(row));
      }
      out << array.dump(2) << "\n";
      break;
    }
    case TableFormat::Plain: {
      out << "   k  sat_bruteforce  sat_formula  quasilinear  match\n";
      for (const auto& r : rows) {
        char line[96];
        std::snprintf(line, sizeof(line), "%4lld  %14s  %11s  %11s  %5s\n", r.k,
                      cell(r.brute).c_str(), cell(r.formula).c_str(), cell(r.quasi).c_str(),
                      r.match ? "yes" : "no");
        out << line;
      }
      break;
    }
  }
  return out.str();
}

bool values_match(const TableRow& r) {
  std::optional<long long> reference;
  for (const auto& v : {r.brute, r.formula, r.quasi}) {
    if (!v.has_value()) continue;
    if (!reference.has_value()) reference = v;
    if (*reference != *v) return false;
  }
  return true;
}

} // namespace

std::string veronese_table(const VeroneseSpec& spec, int k_max, TableFormat format,
                           int brute_k_max) {
  QuasiLinearForm form = quasilinear(spec);
  std::vector<TableRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    TableRow row;
    row.k = k;
    row.formula = sat_veronese_power(spec, k);
    row.quasi = form.evaluate(k);
    VeroneseSpec scaled = spec;
    for (int& b : scaled.bounds) b *= k;
    scaled.degree *= k;
    if (k <= brute_k_max && count_veronese_gens(scaled) <= kPowerBruteGenCap) {
      row.brute = saturate(veronese_ideal(scaled)).sat;
    }
    row.match = values_match(row);
    rows.push_back(row);
  }
  return render_rows(rows, format);
}

std::string power_table(const MonomialIdeal& ideal, int k_max, TableFormat format) {
  std::vector<TableRow> rows;
  MonomialIdeal acc = MonomialIdeal::unit_ideal(ideal.dim());
  for (int k = 1; k <= k_max; ++k) {
    acc = product(acc, ideal);
    TableRow row;
    row.k = k;
    row.brute = saturate(acc).sat;
    row.match = true;
    rows.push_back(row);
  }
  return render_rows(rows, format);
}

} // namespace satmon
