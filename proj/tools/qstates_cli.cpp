// Command-line front end: option parsing only; every command lives in the
// qstates_app library so the tests can drive it in-process.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qstates/app/commands.hpp"
#include "qstates/app/config.hpp"
#include "qstates/errors.hpp"

namespace {

using namespace qstates;

struct RawOptions {
  std::string family = "box";
  std::string scheme = "sh";
  std::string grid;
  std::string units;
  std::vector<std::string> tolerances;
};

void add_shared(CLI::App* cmd, app::RunConfig& cfg, RawOptions& raw) {
  cmd->add_option("--family", raw.family, "box | ho1d | hydrogen | iso_ho");
  cmd->add_option("--scheme", raw.scheme, "sh | darboux | vnw");
  cmd->add_option("--n", cfg.n, "level / principal number / radial number");
  cmd->add_option("--l", cfg.l, "orbital quantum number");
  cmd->add_option("--m", cfg.m, "magnetic quantum number");
  cmd->add_option("--k", cfg.k, "BIC wavenumber");
  cmd->add_option("--lambda", cfg.lambda, "BIC modulation constant");
  cmd->add_option("--width", cfg.width, "box width");
  cmd->add_option("--omega", cfg.omega, "oscillator frequency");
  cmd->add_option("--theta", cfg.theta, "polar angle for 3D states");
  cmd->add_option("--phi", cfg.phi, "azimuth for 3D states");
  cmd->add_option("--count", cfg.count, "levels (spectrum) or n_max (oldquantum)");
  cmd->add_option("--grid", raw.grid, "start:end:points");
  cmd->add_option("--units", raw.units, "natural | rydberg | ev");
  cmd->add_option("--out", cfg.out, "output path (default stdout)");
  cmd->add_option("--tolerance", raw.tolerances, "key=value threshold override")->take_all();
  cmd->add_option("--only", cfg.only, "restrict verify to a group");
  cmd->add_option("--threads", cfg.threads, "worker threads for grid evaluation");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Stationary states: closed forms, Numerov spectra, old quantum theory, BIC potentials"};
  cli.require_subcommand(1);
  app::RunConfig cfg;
  RawOptions raw;

  struct Sub {
    const char* name;
    const char* help;
    app::Command command;
  };
  const Sub subs[] = {
      {"eigenstate", "tabulate a closed-form stationary state", app::Command::eigenstate},
      {"spectrum", "analytic vs Numerov energies", app::Command::spectrum},
      {"bic", "bound state in the continuum: potential, state, residual", app::Command::bic},
      {"oldquantum", "Bohr orbits, WS oscillator levels, transition wavelengths", app::Command::oldquantum},
      {"verify", "run the acceptance checks", app::Command::verify},
  };
  std::vector<std::pair<CLI::App*, app::Command>> commands;
  for (const auto& s : subs) {
    CLI::App* cmd = cli.add_subcommand(s.name, s.help);
    add_shared(cmd, cfg, raw);
    commands.emplace_back(cmd, s.command);
  }
  double delta_e = 0.0;
  auto* delta_opt = commands[3].first->add_option("--delta-e", delta_e, "extra transition energy in eV");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return app::kBadArguments;
  }

  try {
    for (const auto& [cmd, command] : commands)
      if (cmd->parsed()) cfg.command = command;
    cfg.family = wells::parse_family(raw.family);
    cfg.scheme = bic::parse_scheme(raw.scheme);
    if (!raw.grid.empty()) cfg.grid = app::parse_grid(raw.grid);
    if (!raw.units.empty()) cfg.units = app::parse_units(raw.units);
    for (const auto& t : raw.tolerances) cfg.tolerances.push_back(app::parse_tolerance(t));
    if (delta_opt->count() > 0) cfg.delta_e_eV = delta_e;
    if (cfg.threads < 1) throw app::UsageError("--threads must be >= 1");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return app::kBadArguments;
  }
  return app::run(cfg, std::cout, std::cerr);
}
