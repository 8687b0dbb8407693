#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <tuple>
#include <thread>

#include <fmt/format.h>

#include "sheetcrystal/closed_form.hpp"
#include "sheetcrystal/duality.hpp"
#include "sheetcrystal/electrostatics.hpp"
#include "sheetcrystal/errors.hpp"
#include "sheetcrystal/figure.hpp"
#include "sheetcrystal/oracle.hpp"

namespace sheetcrystal::cli {

namespace {

void add(std::vector<std::pair<std::string, std::string>>& s, std::string key, double v) {
  s.emplace_back(std::move(key), format_number(v));
}

std::vector<double> sample_grid(double lo, double hi, int points) {
  std::vector<double> z(static_cast<std::size_t>(points));
  const int last = points - 1;
  for (int i = 0; i < points; ++i) z[i] = lo + (hi - lo) * i / last;
  z.back() = hi;
  return z;
}

} // namespace

int cmd_solve(const ScenarioConfig& config, const UnitSystem& units, const std::string& csv_path,
              std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, std::string>> summary;
  std::optional<DeltaPotentialProblem> problem;
  std::optional<ElectrostaticSolution> es;
  std::function<double(double)> psi_fn;
  double lo = 0.0;
  double hi = 0.0;

  try {
    config.validate();
    switch (config.mode) {
    case Mode::canonical: {
      const CrystalParams p{config.N, config.alpha, config.a, units};
      p.validate();
      const CanonicalCrystal crystal{p.N, sigma_from_alpha(p.alpha, units), p.a};
      es = solve_sheets(crystal.to_sheets(), units);
      problem = ionic_crystal_potential(p);
      psi_fn = [p](double z) { return psi_exact(p, z); };
      summary.emplace_back("mode", "canonical");
      add(summary, "energy", ground_energy(p));
      add(summary, "A", normalization_constant(p));
      add(summary, "A_exact", normalization_constant_exact(p));
      add(summary, "U_exp", expectation_potential(p));
      add(summary, "T_exp", expectation_kinetic(p));
      add(summary, "U_exp_exact", expectation_potential_exact(p));
      add(summary, "T_exp_exact", expectation_kinetic_exact(p));
      lo = -(p.N + 4) * p.a;
      hi = (p.N + 4) * p.a;
      break;
    }
    case Mode::sheets: {
      es = solve_sheets(SheetArray(config.sheets), units);
      const NormalizabilityCheck gate = check_normalizable(*es);
      if (!gate.normalizable) {
        err << "error: " << gate.reason << "\n";
        return exit_input;
      }
      auto gs = std::make_shared<GroundStateSolution>(ground_state_from_electrostatics(*es, units));
      problem = to_quantum(*es, units);
      psi_fn = [gs](double z) { return gs->wavefunction.value(z); };
      summary.emplace_back("mode", "sheets");
      add(summary, "energy", gs->energy);
      add(summary, "A", gs->norm_constant);
      add(summary, "U_exp", expectation_potential_numeric(gs->wavefunction, *problem));
      add(summary, "T_exp", expectation_kinetic_numeric(gs->wavefunction, units));
      const double tail = 6.0 / gs->wavefunction.segments().front().rate;
      lo = es->breakpoints.front() - tail;
      hi = es->breakpoints.back() + tail;
      break;
    }
    case Mode::quantum: {
      std::vector<double> offsets = config.offsets;
      if (offsets.empty()) offsets.assign(config.positions.size() + 1, 0.0);
      problem = DeltaPotentialProblem(config.positions, config.strengths, offsets, units);
      break;
    }
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid configuration: " << e.what() << "\n";
    return exit_input;
  } catch (const NotNormalizable& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }

  const BoundStateList states = find_bound_states(*problem);
  if (config.mode == Mode::quantum) {
    if (states.states.empty()) {
      err << "error: the potential has no bound states\n";
      return exit_input;
    }
    auto g = std::make_shared<BoundState>(states.states.front());
    psi_fn = [g](double z) { return g->wavefunction.value(z); };
    summary.emplace_back("mode", "quantum");
    add(summary, "energy", g->energy);
    add(summary, "U_exp", expectation_potential_numeric(g->wavefunction, *problem));
    add(summary, "T_exp", expectation_kinetic_numeric(g->wavefunction, units));
    const double tail = 6.0 / g->kappa;
    lo = problem->positions().front() - tail;
    hi = problem->positions().back() + tail;
  }
  add(summary, "oracle_energy", states.states.empty() ? 0.0 : states.states.front().energy);
  summary.emplace_back("bound_state_count", std::to_string(states.count()));

  if (config.window) std::tie(lo, hi) = *config.window;

  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) {
    err << "error: cannot write '" << csv_path << "'\n";
    return exit_input;
  }
  csv << "z,V,psi,U_region\n";
  for (double z : sample_grid(lo, hi, config.points)) {
    csv << format_number(z) << ',';
    if (es) csv << format_number(potential_at(*es, z));
    csv << ',' << format_number(psi_fn(z)) << ',' << format_number(problem->offset_at(z))
        << '\n';
  }
  if (!csv) {
    err << "error: failed writing '" << csv_path << "'\n";
    return exit_input;
  }

  summary.emplace_back("csv", csv_path);
  for (const auto& [k, v] : summary) out << k << ": " << v << "\n";
  return exit_ok;
}

int cmd_figure(const std::vector<int>& n_values, double alpha_a, const std::string& out_dir,
               int points, std::ostream& out, std::ostream& err) {
  if (n_values.empty()) {
    err << "error: no N values given\n";
    return exit_input;
  }
  for (int N : n_values) {
    if (N < 1) {
      err << "error: figure N must be >= 1 (got " << N << ")\n";
      return exit_input;
    }
  }
  if (!(alpha_a > 0.0) || points < 2) {
    err << "error: alpha*a must be > 0 and points >= 2\n";
    return exit_input;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    err << "error: cannot create output directory '" << out_dir << "'\n";
    return exit_input;
  }
  for (int N : n_values) {
    const auto path = std::filesystem::path(out_dir) / fmt::format("psi_N{}.csv", N);
    std::ofstream file(path, std::ios::binary);
    file << figure_csv(figure_series(N, alpha_a, points));
    if (!file) {
      err << "error: cannot write '" << path.string() << "'\n";
      return exit_input;
    }
    out << path.string() << "\n";
  }
  return exit_ok;
}

int cmd_verify(Depth depth, std::ostream& out) {
  const VerificationReport report = run_verification(depth);
  out << format_report(report);
  return report.all_passed() ? exit_ok : exit_verify;
}

namespace {

struct SweepRow {
  int N;
  double alpha;
  double a;
  std::string text;
};

std::string sweep_row(int N, double alpha, double a, const UnitSystem& units) {
  const CrystalParams p{N, alpha, a, units};
  const BoundStateList states = find_bound_states(ionic_crystal_potential(p));
  const double E = ground_energy(p);
  double resid = std::numeric_limits<double>::infinity();
  if (!states.states.empty()) {
    const BoundState& g = states.states.front();
    resid = std::abs(E - g.energy);
    const double half = (N + 3) * a;
    for (int i = 0; i < 200; ++i) {
      const double z = -half + 2.0 * half * i / 199.0;
      resid = std::max(resid, std::abs(psi(p, z) - g.wavefunction.value(z)));
    }
  }
  return fmt::format("{},{},{},{},{},{},{},{},{}\n", N, format_number(alpha), format_number(a),
                     format_number(E), format_number(normalization_constant(p)),
                     format_number(expectation_potential(p)),
                     format_number(expectation_kinetic(p)), states.count(),
                     format_number(resid));
}

} // namespace

std::string sweep_csv(const SweepGrid& grid, const UnitSystem& units, unsigned threads) {
  std::vector<SweepRow> rows;
  for (int N : grid.N) {
    for (double alpha : grid.alpha) {
      for (double a : grid.a) rows.push_back({N, alpha, a, {}});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& l, const SweepRow& r) {
    return std::tie(l.N, l.alpha, l.a) < std::tie(r.N, r.alpha, r.a);
  });

  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(rows.size()));
  if (workers <= 1) {
    for (SweepRow& r : rows) r.text = sweep_row(r.N, r.alpha, r.a, units);
  } else {
    // Strided split; each row is written only by its owner.
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < rows.size(); i += workers) {
          rows[i].text = sweep_row(rows[i].N, rows[i].alpha, rows[i].a, units);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  std::string text = "N,alpha,a,E,A,U_exp,T_exp,count,closed_vs_oracle_resid\n";
  for (const SweepRow& r : rows) text += r.text;
  return text;
}

int cmd_sweep(const SweepGrid& grid, const UnitSystem& units, unsigned threads,
              std::ostream& csv, std::ostream& err) {
  if (grid.N.empty() || grid.alpha.empty() || grid.a.empty()) {
    err << "error: sweep grid is empty\n";
    return exit_input;
  }
  for (int N : grid.N) {
    if (N < 0) {
      err << "error: sweep N must be >= 0\n";
      return exit_input;
    }
  }
  for (double v : grid.alpha) {
    if (!(v > 0.0)) {
      err << "error: sweep alpha must be > 0\n";
      return exit_input;
    }
  }
  for (double v : grid.a) {
    if (!(v > 0.0)) {
      err << "error: sweep a must be > 0\n";
      return exit_input;
    }
  }
  csv << sweep_csv(grid, units, threads);
  return exit_ok;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("SHEETCRYSTAL_THREADS");
  if (!raw) return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0') return 0;
  return static_cast<unsigned>(std::min<unsigned long>(v, 256));
}

} // namespace sheetcrystal::cli
