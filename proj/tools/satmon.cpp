// satmon: saturation numbers, socles, Borel closures and powers of monomial
// ideals, with a randomized verification harness for the closed formulas.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "satmon/borel.hpp"
#include "satmon/io.hpp"
#include "satmon/kernels.hpp"
#include "satmon/saturation.hpp"
#include "satmon/verify.hpp"

namespace {

using namespace satmon;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t a = piece.find_first_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty entry in integer list '" + text + "'");
    std::size_t b = piece.find_last_not_of(" \t");
    try {
      out.push_back(std::stoi(piece.substr(a, b - a + 1)));
    } catch (const std::exception&) {
      throw ParseError("bad integer in list '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

TableFormat parse_format(const std::string& name) {
  if (name == "table") return TableFormat::Plain;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw ParseError("unknown format '" + name + "' (expected table, csv or json)");
}

void print_ideal(const MonomialIdeal& I, bool json) {
  if (json) {
    std::cout << ideal_to_json(I).dump() << "\n";
  } else {
    std::cout << "(" << to_text(I) << ")  [n=" << I.dim() << ", " << I.gens().size()
              << " generators]\n";
  }
}

struct IdealArgs {
  std::string ideal_arg;
  std::optional<int> n;
};

void add_ideal_options(CLI::App* cmd, IdealArgs& args) {
  cmd->add_option("ideal", args.ideal_arg,
                  "ideal: JSON file path, inline JSON, or text like \"x1*x2, x2^2\"")
      ->required();
  cmd->add_option("--n", args.n, "ambient dimension for text input (default: inferred)");
}

int run(int argc, char** argv) {
  CLI::App app{"monomial ideal saturation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable output");

  if (const char* cap = std::getenv("SATMON_CAP_NODES")) {
    caps().closure_node_cap = static_cast<std::size_t>(std::stoull(cap));
  }
  std::size_t cap_nodes = caps().closure_node_cap;
  app.add_option("--cap-nodes", cap_nodes, "closure/product node cap");

  // sat
  IdealArgs sat_args;
  auto* sat_cmd = app.add_subcommand("sat", "saturation number and chain of an ideal");
  add_ideal_options(sat_cmd, sat_args);

  // colon
  IdealArgs colon_args;
  auto* colon_cmd = app.add_subcommand("colon", "colon ideal I : m");
  add_ideal_options(colon_cmd, colon_args);

  // layers
  IdealArgs layers_args;
  auto* layers_cmd = app.add_subcommand("layers", "layer ideals J_l along the colon chain");
  add_ideal_options(layers_cmd, layers_args);

  // borel
  std::vector<std::string> borel_seeds;
  std::string borel_bound;
  bool borel_stable = false;
  std::optional<int> borel_n;
  auto* borel_cmd = app.add_subcommand("borel", "smallest (bounded) strongly stable ideal");
  borel_cmd->add_option("monomials", borel_seeds, "seed monomials, e.g. x1*x2^2")->required();
  borel_cmd->add_option("--bound", borel_bound, "bound vector c, e.g. 2,2,2");
  borel_cmd->add_flag("--stable", borel_stable, "stable closure instead of strongly stable");
  borel_cmd->add_option("--n", borel_n, "ambient dimension (default: from bound or inferred)");

  // power
  IdealArgs power_args;
  std::string principal_seed;
  std::string principal_bound;
  int power_k = 1;
  bool power_table_flag = false;
  std::string power_format = "table";
  auto* power_cmd = app.add_subcommand("power", "k-th power of an ideal or principal closure");
  power_cmd->add_option("ideal", power_args.ideal_arg, "ideal (omit with --principal)");
  power_cmd->add_option("--n", power_args.n, "ambient dimension for text input");
  power_cmd->add_option("--principal", principal_seed, "seed monomial u of B^c(u)");
  power_cmd->add_option("--bound", principal_bound, "bound c for --principal");
  power_cmd->add_option("-k,--k", power_k, "exponent")->required();
  power_cmd->add_flag("--table", power_table_flag, "emit brute-force sat table for k=1..K");
  power_cmd->add_option("--format", power_format, "table|csv|json (with --table)");

  // veronese
  std::string veronese_a;
  int veronese_d = 0;
  std::string veronese_mode = "sat";
  int veronese_kmax = 8;
  std::string veronese_format = "table";
  auto* veronese_cmd = app.add_subcommand("veronese", "Veronese-type ideals I_{a,n,d}");
  veronese_cmd->add_option("--a", veronese_a, "bound vector a, e.g. 2,2,1 (n inferred)")
      ->required();
  veronese_cmd->add_option("--d", veronese_d, "generator degree d")->required();
  veronese_cmd->add_option("mode", veronese_mode, "sat | ideal | table | quasilinear");
  veronese_cmd->add_option("--k-max", veronese_kmax, "rows for mode table");
  veronese_cmd->add_option("--format", veronese_format, "table|csv|json");

  // verify
  VerifyConfig cfg;
  auto* verify_cmd = app.add_subcommand("verify", "randomized / grid verification suites");
  std::string suites_help;
  for (const auto& s : suite_names()) {
    suites_help += suites_help.empty() ? s : (", " + s);
  }
  verify_cmd->add_option("--suite", cfg.suite, "one of: " + suites_help)->required();
  verify_cmd->add_option("--trials", cfg.trials, "trial count for randomized suites");
  verify_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  verify_cmd->add_option("--n-max", cfg.n_max, "ambient dimension cap");
  verify_cmd->add_option("--deg-max", cfg.deg_max, "degree cap");
  verify_cmd->add_option("--bound-max", cfg.bound_max, "bound entry cap");
  verify_cmd->add_option("--k-max", cfg.k_max, "power cap");

  // fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "replay the pinned worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2; // --help exits 0, every usage problem is 2
  }
  caps().closure_node_cap = cap_nodes;

  if (sat_cmd->parsed()) {
    MonomialIdeal I = load_ideal(sat_args.ideal_arg, sat_args.n);
    SaturationReport report = saturate(I);
    if (json_out) {
      std::cout << report_to_json(report).dump() << "\n";
    } else {
      std::cout << "sat = " << report.sat << "\n";
      std::cout << "saturation = (" << to_text(report.saturation) << ")\n";
    }
    return 0;
  }
  if (colon_cmd->parsed()) {
    MonomialIdeal I = load_ideal(colon_args.ideal_arg, colon_args.n);
    print_ideal(colon_max(I), json_out);
    return 0;
  }
  if (layers_cmd->parsed()) {
    MonomialIdeal I = load_ideal(layers_args.ideal_arg, layers_args.n);
    SaturationReport report = saturate(I);
    if (json_out) {
      std::cout << report_to_json(report).dump() << "\n";
    } else {
      std::cout << "sat = " << report.sat << "\n";
      for (std::size_t l = 0; l < report.layers.size(); ++l) {
        std::cout << "J_" << l << " = (" << to_text(report.layers[l]) << ")\n";
      }
    }
    return 0;
  }
  if (borel_cmd->parsed()) {
    std::optional<BoundVector> bound;
    if (!borel_bound.empty()) bound = BoundVector(parse_int_list(borel_bound));
    int n = 0;
    if (borel_n.has_value()) {
      n = *borel_n;
    } else if (bound.has_value()) {
      n = bound->dim();
    } else {
      for (const auto& s : borel_seeds) n = std::max(n, infer_dimension(s));
    }
    std::vector<Monomial> seeds;
    for (const auto& s : borel_seeds) seeds.push_back(parse_monomial(s, n));
    MonomialIdeal closure;
    if (bound.has_value()) {
      closure = borel_stable ? bounded_stable_closure(seeds, *bound, n)
                             : bounded_borel_closure(seeds, *bound, n);
    } else {
      closure = borel_stable ? stable_closure(seeds, n) : borel_closure(seeds, n);
    }
    print_ideal(closure, json_out);
    return 0;
  }
  if (power_cmd->parsed()) {
    MonomialIdeal result;
    if (!principal_seed.empty()) {
      if (principal_bound.empty()) {
        throw ParseError("--principal requires --bound");
      }
      BoundVector c(parse_int_list(principal_bound));
      Monomial u = parse_monomial(principal_seed, c.dim());
      result = principal_power(u, c, power_k);
    } else {
      if (power_args.ideal_arg.empty()) {
        throw ParseError("power: give an ideal or --principal u --bound c");
      }
      MonomialIdeal I = load_ideal(power_args.ideal_arg, power_args.n);
      if (power_table_flag) {
        std::cout << power_table(I, power_k, parse_format(power_format));
        return 0;
      }
      result = power(I, power_k);
    }
    print_ideal(result, json_out);
    return 0;
  }
  if (veronese_cmd->parsed()) {
    VeroneseSpec spec{parse_int_list(veronese_a), veronese_d};
    if (veronese_mode == "sat") {
      std::cout << "sat = " << sat_veronese(spec) << "\n";
    } else if (veronese_mode == "ideal") {
      print_ideal(veronese_ideal(spec), json_out);
    } else if (veronese_mode == "table") {
      std::cout << veronese_table(spec, veronese_kmax, parse_format(veronese_format));
    } else if (veronese_mode == "quasilinear") {
      QuasiLinearForm form = quasilinear(spec);
      std::cout << "period = " << form.period << "\n";
      for (int i = 0; i < form.period; ++i) {
        std::cout << "k = " << i << " (mod " << form.period << "): sat(I^k) = "
                  << to_string(form.pieces[static_cast<std::size_t>(i)].first) << "*k";
        const Rational& q = form.pieces[static_cast<std::size_t>(i)].second;
        if (q < Rational(0)) {
          std::cout << " - " << to_string(Rational(0) - q);
        } else if (!(q == Rational(0))) {
          std::cout << " + " << to_string(q);
        }
        std::cout << "\n";
      }
    } else {
      throw ParseError("unknown veronese mode '" + veronese_mode + "'");
    }
    return 0;
  }
  if (verify_cmd->parsed()) {
    VerifyReport report = run_suite(cfg);
    if (json_out) {
      std::cout << report_to_json(report).dump(2) << "\n";
    } else {
      std::cout << report_to_text(report);
    }
    std::cerr << "elapsed: " << report.elapsed_seconds << " s\n";
    if (cfg.suite == "stable-conjecture") return 0;
    return report.ok() ? 0 : 1;
  }
  if (fixtures_cmd->parsed()) {
    VerifyReport report = run_fixtures();
    if (json_out) {
      std::cout << report_to_json(report).dump(2) << "\n";
    } else {
      std::cout << report_to_text(report);
    }
    std::cerr << "elapsed: " << report.elapsed_seconds << " s\n";
    return report.ok() ? 0 : 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return 2;
  } catch (const ExponentOverflow& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
