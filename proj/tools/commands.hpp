#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "sheetcrystal/units.hpp"
#include "sheetcrystal/verification.hpp"

namespace sheetcrystal::cli {

/// 0 success, 1 input or validation error, 2 verification failure.
enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_verify = 2 };

/// Writes `z,V,psi,U_region` to csv_path and a `key: value` summary to out.
int cmd_solve(const ScenarioConfig& config, const UnitSystem& units, const std::string& csv_path,
              std::ostream& out, std::ostream& err);

/// One `z,psi` file per N, named psi_N<N>.csv, inside out_dir.
int cmd_figure(const std::vector<int>& n_values, double alpha_a, const std::string& out_dir,
               int points, std::ostream& out, std::ostream& err);

int cmd_verify(Depth depth, std::ostream& out);

struct SweepGrid {
  std::vector<int> N;
  std::vector<double> alpha;
  std::vector<double> a;
};

/// Rows in (N, alpha, a) lexicographic order whatever the thread count.
int cmd_sweep(const SweepGrid& grid, const UnitSystem& units, unsigned threads,
              std::ostream& csv, std::ostream& err);

/// Text of the sweep CSV, exposed for tests.
std::string sweep_csv(const SweepGrid& grid, const UnitSystem& units, unsigned threads);

/// SHEETCRYSTAL_THREADS, 0 when unset or unparsable.
unsigned threads_from_env();

} // namespace sheetcrystal::cli
