#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "satmon/ideal.hpp"
#include "satmon/rng.hpp"
#include "satmon/veronese.hpp"

namespace satmon {

/// One randomized or grid-driven verification run. Identical configs give
/// identical instance streams and verdicts.
struct VerifyConfig {
  std::string suite;
  int trials = 200;
  std::uint64_t seed = 42;
  int n_max = 4;
  int deg_max = 5;
  int bound_max = 4;
  int k_max = 3;
};

struct VerifyFailure {
  int trial = 0;
  std::string message;
  nlohmann::json instance; // replayable: carries the ideal JSON involved
};

struct VerifyReport {
  std::string suite;
  int trials_run = 0;
  std::vector<VerifyFailure> failures; // sorted by trial index
  std::vector<std::string> notes;      // observational output (stable-conjecture)
  double elapsed_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "proffind",   "socle",     "sat-formula", "subadditivity", "layers-jk",
      "soclepower", "veronese",  "quasilinear", "stable-conjecture"};
  return names;
}

/// Knobs for the random instance generators.
struct RandomIdealParams {
  int n = 3;
  int deg_max = 4;
  int max_seeds = 3;
  bool equigenerated = false;
  const BoundVector* bound = nullptr; // null: unbounded closure
};

/// Borel closure of 1..max_seeds random seed monomials; bounded and
/// equigenerated per params. Same rng state, same ideal.
MonomialIdeal random_strongly_stable(SplitMix64& rng, const RandomIdealParams& params);

/// Stable-closure counterpart (for the socle identity and the open
/// conjecture probe).
MonomialIdeal random_stable(SplitMix64& rng, const RandomIdealParams& params);

/// Runs the named suite. Throws NotApplicable for an unknown suite name.
/// Every suite except "stable-conjecture" reports mismatches as failures;
/// "stable-conjecture" only counts observations in notes.
VerifyReport run_suite(const VerifyConfig& cfg);

/// Replays the pinned worked examples, comparing generator
/// lists bit-exactly and saturation numbers exactly.
VerifyReport run_fixtures();

nlohmann::json report_to_json(const VerifyReport& report);

/// Human/CSV/JSON rendering of a VerifyReport (stdout form; no timing so
/// identical runs are byte-identical).
std::string report_to_text(const VerifyReport& report);

enum class TableFormat { Plain, Csv, Json };

/// k-indexed saturation table for a Veronese spec: brute-force sat where
/// feasible, the closed form, the quasi-linear evaluation and a match flag.
std::string veronese_table(const VeroneseSpec& spec, int k_max, TableFormat format,
                           int brute_k_max = 4);

/// Brute-force-only power table for an arbitrary ideal.
std::string power_table(const MonomialIdeal& ideal, int k_max, TableFormat format);

} // namespace satmon
