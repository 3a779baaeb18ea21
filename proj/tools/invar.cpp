// invar: exact analysis of permutation-group invariant rings: Molien series
// in closed form, orbit/Burnside dimension counts, Göbel generators, and
// non-Cohen-Macaulayness certificates at p = 2.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "invar/certify.hpp"
#include "invar/errors.hpp"
#include "invar/group_spec.hpp"
#include "invar/molien.hpp"
#include "invar/orbits.hpp"
#include "invar/report.hpp"

namespace {

struct CommandArgs {
  std::string family;
  int n = 0;
  bool n_set = false;
  std::vector<std::string> gens;
  bool gens_set = false;
  invar::RunConfig config;
  int characteristic = 2; // certify only
};

void add_common_flags(CLI::App* cmd, CommandArgs& args) {
  cmd->add_option("--family", args.family,
                  "named family NAME:N (cyclic, symmetric, alternating, dihedral, klein)");
  cmd->add_option("--n", args.n, "degree for raw generators")->each([&](const std::string&) {
    args.n_set = true;
  });
  cmd->add_option("--gens", args.gens,
                  "generators in cycle notation, e.g. \"(1 2 3 4)\"; repeatable, comma-separable")
      ->each([&](const std::string&) { args.gens_set = true; });
  cmd->add_option("--max-degree", args.config.max_degree, "largest expansion degree")
      ->default_val(12);
  cmd->add_option("--closure-cap", args.config.closure_cap, "group closure size cap")
      ->default_val(invar::kDefaultClosureCap);
  cmd->add_option("--enum-cap", args.config.enumeration_cap, "monomial enumeration cap")
      ->default_val(1000000);
  cmd->add_flag("--json", args.config.json, "emit JSON instead of text");
}

invar::GroupSpec make_spec(const CommandArgs& args) {
  const bool has_family = !args.family.empty();
  const bool has_raw = args.n_set || args.gens_set;
  if (has_family && has_raw)
    throw invar::UsageError("--family is mutually exclusive with --n/--gens");
  if (!has_family && !has_raw)
    throw invar::UsageError("one of --family or --n with --gens is required");
  if (has_family) return invar::GroupSpec::parse_family(args.family);
  if (!args.n_set) throw invar::UsageError("--gens needs --n");
  if (!args.gens_set) throw invar::UsageError("--n needs --gens (use --gens \"\" for none)");

  // Each --gens value may itself hold several comma-separated generators.
  std::vector<std::string> gens;
  for (const auto& value : args.gens) {
    std::size_t start = 0;
    while (true) {
      const auto comma = value.find(',', start);
      gens.push_back(value.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return invar::GroupSpec::raw(args.n, std::move(gens));
}

void emit(const std::string& text) { std::cout << text; }

int run_analyze(const CommandArgs& args) {
  const invar::PermGroup g = make_spec(args).build(args.config.closure_cap);
  const invar::StructureReport report = invar::analyze(g);
  const invar::GorensteinStatus status = invar::gorenstein_status_char0(report);
  emit(args.config.json ? invar::render(invar::analyze_json(report, status))
                        : invar::analyze_text(report, status));
  return 0;
}

int run_molien(const CommandArgs& args) {
  const invar::PermGroup g = make_spec(args).build(args.config.closure_cap);
  const invar::MolienResult m = invar::molien_series(g);
  emit(args.config.json ? invar::render(invar::molien_json(m)) : invar::molien_text(m, g.degree()));
  return 0;
}

int run_hilbert(const CommandArgs& args) {
  if (args.config.max_degree < 0) throw invar::UsageError("--max-degree must be >= 0");
  const invar::PermGroup g = make_spec(args).build(args.config.closure_cap);
  const invar::MolienResult m = invar::molien_series(g);
  const auto coeffs =
      invar::series_coefficients(m.canonical, static_cast<std::size_t>(args.config.max_degree));
  emit(args.config.json ? invar::render(invar::hilbert_json(g.degree(), g.order(), coeffs))
                        : invar::hilbert_text(g.degree(), g.order(), coeffs));
  return 0;
}

int run_gobel(const CommandArgs& args) {
  const invar::PermGroup g = make_spec(args).build(args.config.closure_cap);
  const auto generators = invar::gobel_generators(g, args.config.enumeration_cap);
  emit(args.config.json ? invar::render(invar::gobel_json(g.degree(), g.order(), generators))
                        : invar::gobel_text(g.degree(), g.order(), generators));
  return 0;
}

int run_orbit_dim(const CommandArgs& args) {
  if (args.config.max_degree < 0) throw invar::UsageError("--max-degree must be >= 0");
  const invar::PermGroup g = make_spec(args).build(args.config.closure_cap);
  std::vector<std::size_t> dims;
  for (int d = 0; d <= args.config.max_degree; ++d)
    dims.push_back(invar::orbit_count(g, d, args.config.enumeration_cap));
  emit(args.config.json ? invar::render(invar::orbit_dim_json(g.degree(), g.order(), dims))
                        : invar::orbit_dim_text(g.degree(), g.order(), dims));
  return 0;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int run_certify(const CommandArgs& args) {
  const int p = args.characteristic;
  if (p != 0 && !is_prime(p))
    throw invar::UsageError("--char must be 0 or a prime, got " + std::to_string(p));
  const invar::PermGroup g = make_spec(args).build(args.config.closure_cap);

  if (p == 2) {
    const invar::Certificate cert = invar::certify_non_cm_char2(g);
    emit(args.config.json ? invar::render(invar::certificate_json(cert))
                          : invar::certificate_text(cert));
    return 0;
  }
  if (p == 0) {
    const invar::StructureReport report = invar::analyze(g);
    const invar::GorensteinStatus status = invar::gorenstein_status_char0(report);
    emit(args.config.json ? invar::render(invar::gorenstein_json(status, report))
                          : invar::gorenstein_text(status, report));
    return 0;
  }

  // Characteristics other than 0 and 2 are outside the rule engine.
  const bool nonmodular = g.order() % static_cast<std::size_t>(p) != 0;
  const std::string detail =
      nonmodular ? "nonmodular: CM by Hochster-Eagon" : "no rule applies";
  if (args.config.json) {
    invar::Json j;
    j["characteristic"] = p;
    j["verdict"] = nonmodular ? "nonmodular_cohen_macaulay" : "no_rule_applies";
    j["detail"] = detail;
    emit(invar::render(j));
  } else {
    emit("characteristic: " + std::to_string(p) + "\n" + detail + "\n");
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant-ring analysis for finite permutation groups"};
  app.require_subcommand(1);

  CommandArgs args;
  CLI::App* analyze = app.add_subcommand("analyze", "structure report and Gorenstein status");
  CLI::App* molien = app.add_subcommand("molien", "Molien series in canonical closed form");
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series coefficients");
  CLI::App* gobel = app.add_subcommand("gobel", "Goebel generating set (orbit sums)");
  CLI::App* orbit_dim =
      app.add_subcommand("orbit-dim", "invariant dimensions by explicit orbit enumeration");
  CLI::App* certify =
      app.add_subcommand("certify", "non-Cohen-Macaulayness certificate at p = 2");
  for (CLI::App* cmd : {analyze, molien, hilbert, gobel, orbit_dim, certify})
    add_common_flags(cmd, args);
  certify->add_option("--char", args.characteristic, "characteristic (0 or a prime)")
      ->default_val(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[UsageError]: " << e.what() << std::endl;
    return 1;
  }

  try {
    if (analyze->parsed()) return run_analyze(args);
    if (molien->parsed()) return run_molien(args);
    if (hilbert->parsed()) return run_hilbert(args);
    if (gobel->parsed()) return run_gobel(args);
    if (orbit_dim->parsed()) return run_orbit_dim(args);
    if (certify->parsed()) return run_certify(args);
  } catch (const invar::Error& e) {
    std::cerr << "error[" << e.name() << "]: " << e.what() << std::endl;
    switch (e.error_class()) {
      case invar::ErrorClass::Usage: return 1;
      case invar::ErrorClass::CapExceeded: return 2;
      case invar::ErrorClass::Internal: return 3;
    }
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error[Internal]: " << e.what() << std::endl;
    return 3;
  }
  return 1;
}
