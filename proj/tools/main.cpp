#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

using namespace sheetcrystal;

int main(int argc, char** argv) {
  CLI::App app{"sheetcrystal: charged-sheet electrostatics and the dual delta-crystal ground state"};
  app.require_subcommand(1);

  std::string units_path;
  app.add_option("--units", units_path, "unit file with hbar, mass, eps0, a0 [, V0]");

  // solve
  auto* solve = app.add_subcommand("solve", "solve one configuration");
  std::string config_path;
  std::string solve_out = "solve.csv";
  std::string window_text;
  int points = 0;
  int crystal_N = -1;
  double crystal_alpha = 1.0;
  double crystal_a = 1.0;
  solve->add_option("--config", config_path, "scenario file (key = value lines)");
  solve->add_option("--out", solve_out, "CSV output path")->capture_default_str();
  solve->add_option("--window", window_text, "sampling window lo,hi");
  solve->add_option("--points", points, "number of samples");
  solve->add_option("--N", crystal_N, "canonical crystal N (when no --config)");
  solve->add_option("--alpha", crystal_alpha, "canonical crystal strength");
  solve->add_option("--spacing", crystal_a, "canonical crystal spacing a");

  // figure
  auto* figure = app.add_subcommand("figure", "write psi(z) for crystals N = 1..4");
  std::string n_values_text = "1:4";
  double alpha_a = 1.0;
  std::string figure_out = ".";
  int figure_points = 2001;
  figure->add_option("--n-values", n_values_text, "N values, e.g. 1:4 or 1,3")->capture_default_str();
  figure->add_option("--alpha-a", alpha_a, "product alpha*a")->capture_default_str();
  figure->add_option("--out", figure_out, "output directory")->capture_default_str();
  figure->add_option("--points", figure_points, "samples per file")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string depth = "quick";
  verify->add_option("--depth", depth, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "closed forms vs oracle over a parameter grid");
  std::string sweep_N = "0:4";
  std::string sweep_alpha = "1";
  std::string sweep_a = "1";
  std::string sweep_out;
  sweep->add_option("--N", sweep_N, "N range lo:hi or list")->capture_default_str();
  sweep->add_option("--alpha", sweep_alpha, "alpha list")->capture_default_str();
  sweep->add_option("--spacing", sweep_a, "a list")->capture_default_str();
  sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_input;
  }

  try {
    UnitSystem units = UnitSystem::atomic();
    if (!units_path.empty()) units = cli::parse_units(cli::read_file(units_path));

    if (*solve) {
      cli::ScenarioConfig cfg;
      if (!config_path.empty()) {
        cfg = cli::parse_config(cli::read_file(config_path));
        if (units_path.empty()) units = cli::units_preset(cfg.units);
      } else {
        if (crystal_N < 0) {
          std::cerr << "error: solve needs --config or --N\n";
          return cli::exit_input;
        }
        cfg.mode = cli::Mode::canonical;
        cfg.N = crystal_N;
        cfg.alpha = crystal_alpha;
        cfg.a = crystal_a;
      }
      if (!window_text.empty()) cfg.window = cli::parse_window(window_text);
      if (points != 0) cfg.points = points;
      const std::string csv_path = solve->count("--out") ? solve_out : cfg.out.value_or(solve_out);
      return cli::cmd_solve(cfg, units, csv_path, std::cout, std::cerr);
    }
    if (*figure) {
      return cli::cmd_figure(cli::parse_int_list(n_values_text), alpha_a, figure_out,
                             figure_points, std::cout, std::cerr);
    }
    if (*verify) {
      return cli::cmd_verify(depth == "full" ? Depth::full : Depth::quick, std::cout);
    }
    if (*sweep) {
      const cli::SweepGrid grid{cli::parse_int_list(sweep_N), cli::parse_real_list(sweep_alpha),
                                cli::parse_real_list(sweep_a)};
      const unsigned threads = cli::threads_from_env();
      if (sweep_out.empty()) return cli::cmd_sweep(grid, units, threads, std::cout, std::cerr);
      std::ofstream file(sweep_out, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot write '" << sweep_out << "'\n";
        return cli::exit_input;
      }
      return cli::cmd_sweep(grid, units, threads, file, std::cerr);
    }
  } catch (const cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_input;
  }
  return cli::exit_input;
}
