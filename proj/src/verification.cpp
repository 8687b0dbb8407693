#include "sheetcrystal/verification.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "sheetcrystal/duality.hpp"
#include "sheetcrystal/electrostatics.hpp"
#include "sheetcrystal/errors.hpp"
#include "sheetcrystal/figure.hpp"
#include "sheetcrystal/oracle.hpp"

namespace sheetcrystal {

namespace {

using boost::math::quadrature::gauss_kronrod;

class Recorder {
public:
  explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

  // Passes when measured <= tolerance.
  void bound(int criterion, std::string name, double measured, double tolerance) {
    const bool ok = std::isfinite(measured) && measured <= tolerance;
    out_.push_back({criterion, std::move(name), measured, tolerance, ok});
  }

  void flag(int criterion, std::string name, bool ok) {
    out_.push_back({criterion, std::move(name), ok ? 0.0 : 1.0, 0.0, ok});
  }

private:
  std::vector<CheckResult>& out_;
};

// Adaptive Gauss-Kronrod on [lo, hi].
template <typename F>
double integrate(F f, double lo, double hi) {
  return gauss_kronrod<double, 61>::integrate(f, lo, hi, 10, 1e-12);
}

// Integral of psi^2 over the real line, split on the cusps; tails are cut
// where psi^2 has fallen by e^-80.
double quadrature_norm(const std::function<double(const CrystalParams&, double)>& psi_fn,
                       const CrystalParams& p) {
  auto sq = [&](double z) {
    const double v = psi_fn(p, z);
    return v * v;
  };
  const double edge = p.N * p.a;
  const double tail = 40.0 / p.kappa();
  double total = integrate(sq, -edge - tail, -edge) + integrate(sq, edge, edge + tail);
  for (int n = -p.N; n < p.N; ++n) total += integrate(sq, n * p.a, (n + 1) * p.a);
  return total;
}

DeltaPotentialProblem single_delta(double alpha) {
  return DeltaPotentialProblem({0.0}, {-alpha}, UnitSystem::atomic());
}

DeltaPotentialProblem two_sheet_problem(double alpha, double a) {
  const UnitSystem u = UnitSystem::atomic();
  const double well = -2.0 * alpha * alpha / u.hbar2_over_m();
  return DeltaPotentialProblem({-a, a}, {-alpha, -alpha}, {0.0, well, 0.0}, u);
}

SheetArray quasicrystal_sheets() {
  return SheetArray({{-1.3, 2.0}, {-0.2, -1.5}, {0.9, 2.0}, {2.4, -1.0}, {3.0, 1.5}});
}

std::string crystal_label(const CrystalParams& p) {
  return fmt::format("N={} alpha={} a={}", p.N, p.alpha, p.a);
}

// Criterion 3 plus its supplementary twin.
void check_normalization(Recorder& rec, int criterion, const std::string& prefix,
                         const ClosedFormSubject& s, int n_max) {
  const UnitSystem u = UnitSystem::atomic();
  for (int N = 0; N <= n_max; ++N) {
    const CrystalParams p{N, 1.0, 1.0, u};
    rec.bound(criterion, fmt::format("{}psi quadrature norm N={}", prefix, N),
              std::abs(quadrature_norm(s.psi, p) - 1.0), 1e-10);

    // Exact segment integration of exp(2V/V0) from the sheet electrostatics.
    const CanonicalCrystal crystal{N, sigma_from_alpha(p.alpha, u), p.a};
    const ElectrostaticSolution es = solve_sheets(crystal.to_sheets(), u);
    const GroundStateSolution gs = ground_state_from_electrostatics(es, u);
    const double A = s.normalization_constant(p);
    rec.bound(criterion, fmt::format("{}normalization_constant vs segment-exact N={}", prefix, N),
              std::abs(A * A / (gs.norm_constant * gs.norm_constant) - 1.0), 1e-10);
  }
}

void check_expectations(Recorder& rec, int criterion, const std::string& prefix,
                        const ClosedFormSubject& s, int n_max) {
  const UnitSystem u = UnitSystem::atomic();
  for (int N = 0; N <= n_max; ++N) {
    const CrystalParams p{N, 1.0, 1.0, u};
    const DeltaPotentialProblem problem = ionic_crystal_potential(p);
    const BoundState g = ground_state(problem);
    const double u_num = expectation_potential_numeric(g.wavefunction, problem);
    const double t_num = expectation_kinetic_numeric(g.wavefunction, u);
    rec.bound(criterion, fmt::format("{}expectation_potential vs oracle N={}", prefix, N),
              std::abs(s.expectation_potential(p) - u_num), 1e-10);
    rec.bound(criterion, fmt::format("{}expectation_kinetic vs oracle N={}", prefix, N),
              std::abs(s.expectation_kinetic(p) - t_num), 1e-10);
  }
  for (int N = 0; N <= 12; ++N) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      for (double a : {0.5, 1.0, 2.0}) {
        const CrystalParams p{N, alpha, a, u};
        const double E = s.ground_energy(p);
        const double sum = s.expectation_kinetic(p) + s.expectation_potential(p);
        rec.bound(criterion,
                  fmt::format("{}expectation_kinetic + expectation_potential = E {}", prefix,
                              crystal_label(p)),
                  std::abs(sum - E) / std::abs(E), 1e-12);
      }
    }
  }
}

void check_segment_integral(Recorder& rec, int criterion, const std::string& prefix,
                            const std::function<double(int, double, double)>& closed,
                            int n_max) {
  for (int N = 1; N <= n_max; ++N) {
    for (double sv : {-2.0, -1.0, 1.0, 2.0}) {
      const double a = 1.0;
      auto integrand = [&](double z) { return std::exp(segment_exponent(N, sv, a, z)); };
      double quad = 0.0;
      for (int k = 0; k < N; ++k) quad += integrate(integrand, k * a, (k + 1) * a);
      rec.bound(criterion,
                fmt::format("{}segment_integral_closed vs quadrature N={} s={}", prefix, N, sv),
                std::abs(closed(N, sv, a) - quad) / std::abs(quad), 1e-10);
    }
  }
}

void check_boundary_conditions(Recorder& rec, const std::string& label,
                               const DeltaPotentialProblem& problem) {
  const BoundStateList list = find_bound_states(problem);
  for (std::size_t i = 0; i < list.states.size(); ++i) {
    const BoundState& st = list.states[i];
    rec.bound(8, fmt::format("psi continuity {} state {}", label, i), st.continuity_residual,
              1e-12);
    rec.bound(8, fmt::format("psi cusp {} state {}", label, i), st.cusp_residual, 1e-9);
  }
}

void check_sheet_conditions(Recorder& rec, const std::string& label, const SheetArray& sheets) {
  const UnitSystem u = UnitSystem::atomic();
  const ElectrostaticSolution es = solve_sheets(sheets, u);
  const auto& z = es.breakpoints;
  double gap = 1.0;
  for (std::size_t i = 1; i < z.size(); ++i) gap = std::min(gap, z[i] - z[i - 1]);
  const double h = gap / 4.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double v = potential_at(es, z[i]);
    const double right = (potential_at(es, z[i] + h) - v) / h;
    const double left = (v - potential_at(es, z[i] - h)) / h;
    worst = std::max(worst, std::abs((right - left) + es.densities[i] / u.eps0()));
  }
  rec.bound(8, fmt::format("potential slope jump {}", label), worst, 1e-12);

  if (check_normalizable(es).normalizable) {
    const GroundStateSolution gs = ground_state_from_electrostatics(es, u);
    const ResidualReport r = verify_schrodinger_residual(to_quantum(es, u), gs);
    rec.bound(8, fmt::format("dual psi continuity {}", label), r.continuity, 1e-12);
    rec.bound(8, fmt::format("dual psi cusp {}", label), r.cusp, 1e-9);
    rec.bound(8, fmt::format("dual psi curvature {}", label), r.region, 1e-12);
  }
}

void check_figure(Recorder& rec, int N) {
  const FigureSeries series = figure_series(N, 1.0);
  std::vector<std::string> header;
  const auto rows = parse_numeric_csv(figure_csv(series), &header);
  rec.flag(9, fmt::format("figure N={} header z,psi and 2001 rows", N),
           header == std::vector<std::string>{"z", "psi"} && rows.size() == 2001);
  std::vector<double> z, psi;
  for (const auto& r : rows) {
    z.push_back(r.at(0));
    psi.push_back(r.at(1));
  }
  const std::size_t P = z.size();

  double odd = 0.0;
  double min_psi = psi.front();
  for (std::size_t i = 0; i < P; ++i) {
    odd = std::max(odd, std::abs(psi[i] - psi[P - 1 - i]));
    min_psi = std::min(min_psi, psi[i]);
  }
  rec.bound(9, fmt::format("figure N={} evenness", N), odd, 1e-12);
  rec.flag(9, fmt::format("figure N={} strictly positive", N), min_psi > 0.0);

  // Second differences: psi'' = kappa^2 psi away from the sites, a kink of
  // size |dpsi'| / h^2 * (h - distance) near each site.
  const double kappa = 1.0;
  const double h = z[1] - z[0];
  double smooth_worst = 0.0;
  double kink_weakest = 1e300;
  std::size_t kinks_seen = 0;
  for (int n = -N; n <= N; ++n) {
    const auto nearest = static_cast<std::size_t>(std::lround((n - z[0]) / h));
    const double d2 =
        (psi[nearest + 1] - 2.0 * psi[nearest] + psi[nearest - 1]) / (h * h) -
        kappa * kappa * psi[nearest];
    const double expected_jump = 2.0 * kappa * psi[nearest];
    kink_weakest = std::min(kink_weakest, std::abs(d2) * h / expected_jump);
    ++kinks_seen;
  }
  for (std::size_t i = 1; i + 1 < P; ++i) {
    bool near_site = false;
    for (int n = -N; n <= N; ++n) {
      if (std::abs(z[i] - n) < 1.5 * h) near_site = true;
    }
    if (near_site) continue;
    const double d2 = (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / (h * h) - kappa * kappa * psi[i];
    smooth_worst = std::max(smooth_worst, std::abs(d2));
  }
  rec.bound(9, fmt::format("figure N={} smooth between integer z", N), smooth_worst, 1e-4);
  rec.flag(9, fmt::format("figure N={} cusp at each of the {} integer sites", N, 2 * N + 1),
           kinks_seen == static_cast<std::size_t>(2 * N + 1) && kink_weakest > 0.25);

  double decay_worst = 0.0;
  for (std::size_t i = 0; i + 1 < P; ++i) {
    if (z[i] > N && z[i + 1] > N) {
      const double rate = -(std::log(psi[i + 1]) - std::log(psi[i])) / (z[i + 1] - z[i]);
      decay_worst = std::max(decay_worst, std::abs(rate - kappa));
    }
  }
  rec.bound(9, fmt::format("figure N={} decay rate 1 beyond |z|>N", N), decay_worst, 1e-9);

  if (N == 1) {
    const double A = 1.0 / std::sqrt(2.0 * std::exp(-2.0) - std::exp(-4.0));
    auto at = [&](double target) {
      const auto i = static_cast<std::size_t>(std::lround((target - z[0]) / h));
      return psi[i];
    };
    rec.bound(9, "figure N=1 psi(0) = A e^-2", std::abs(at(0.0) - A * std::exp(-2.0)), 1e-6);
    rec.bound(9, "figure N=1 psi(1) = A e^-1", std::abs(at(1.0) - A * std::exp(-1.0)), 1e-6);
    rec.bound(9, "figure N=1 psi(-1) = A e^-1", std::abs(at(-1.0) - A * std::exp(-1.0)), 1e-6);
  }
}

} // namespace

ClosedFormSubject published_closed_forms() {
  return {
      [](const CrystalParams& p) { return ground_energy(p); },
      [](const CrystalParams& p) { return normalization_constant(p); },
      [](const CrystalParams& p, double z) { return psi(p, z); },
      [](const CrystalParams& p) { return expectation_potential(p); },
      [](const CrystalParams& p) { return expectation_kinetic(p); },
      [](int N, double s, double a) { return segment_integral_closed(N, s, a); },
  };
}

ClosedFormSubject exact_closed_forms() {
  return {
      [](const CrystalParams& p) { return ground_energy(p); },
      [](const CrystalParams& p) { return normalization_constant_exact(p); },
      [](const CrystalParams& p, double z) { return psi_exact(p, z); },
      [](const CrystalParams& p) { return expectation_potential_exact(p); },
      [](const CrystalParams& p) { return expectation_kinetic_exact(p); },
      [](int N, double s, double a) { return segment_integral_exact(N, s, a); },
  };
}

std::string criterion_title(int criterion) {
  switch (criterion) {
  case 0: return "supplementary: exact closed forms";
  case 1: return "single-delta ground state";
  case 2: return "N-independence of the ground energy";
  case 3: return "normalization";
  case 4: return "expectation values";
  case 5: return "two-sheet dual with constant well";
  case 6: return "normalizability gate";
  case 7: return "identity suite";
  case 8: return "boundary conditions";
  case 9: return "figure data";
  case 10: return "bound-state count audit";
  }
  return "unknown";
}

bool VerificationReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CriterionSummary> VerificationReport::summarize() const {
  std::map<int, CriterionSummary> by_id;
  for (const CheckResult& c : checks) {
    CriterionSummary& s = by_id[c.criterion];
    s.criterion = c.criterion;
    s.title = criterion_title(c.criterion);
    ++s.checks;
    if (c.tolerance > 0.0) s.worst_ratio = std::max(s.worst_ratio, c.measured / c.tolerance);
    if (!c.passed) {
      if (s.failures == 0) s.first_failure = c.name;
      ++s.failures;
    }
  }
  std::vector<CriterionSummary> out;
  for (int id = 1; id <= 10; ++id) {
    if (by_id.count(id)) out.push_back(by_id[id]);
  }
  if (by_id.count(0)) out.push_back(by_id[0]);
  return out;
}

VerificationReport run_verification(Depth depth, const ClosedFormSubject& subject) {
  VerificationReport report;
  report.depth = depth;
  Recorder rec(report.checks);
  const UnitSystem u = UnitSystem::atomic();
  const int n_max = depth == Depth::full ? 8 : 4;
  const int n_identity = depth == Depth::full ? 20 : 4;

  // 1
  for (double alpha : {0.5, 1.0, 2.0}) {
    const double expected = -alpha * alpha / 2.0;
    const BoundState g = ground_state(single_delta(alpha));
    rec.bound(1, fmt::format("oracle single delta energy alpha={}", alpha),
              std::abs(g.energy - expected), 1e-10);
    const CrystalParams p{0, alpha, 1.0, u};
    rec.bound(1, fmt::format("ground_energy single delta alpha={}", alpha),
              std::abs(subject.ground_energy(p) - expected), 0.0);
  }

  // 2
  for (int N = 0; N <= n_max; ++N) {
    const CrystalParams p{N, 1.0, 1.0, u};
    rec.bound(2, fmt::format("ground_energy N={}", N), std::abs(subject.ground_energy(p) + 0.5),
              1e-9);
    rec.bound(2, fmt::format("oracle ground energy N={}", N),
              std::abs(ground_state(ionic_crystal_potential(p)).energy + 0.5), 1e-9);
  }

  // 3
  check_normalization(rec, 3, "", subject, n_max);
  for (int N = 0; N <= n_max; N += 2) {
    const CrystalParams p{N, 1.0, 1.0, u};
    const double expected = std::exp(p.kappa() * N * p.a);
    rec.bound(3, fmt::format("normalization_constant = e^(kappa N a) N={}", N),
              std::abs(subject.normalization_constant(p) - expected) / expected, 1e-12);
  }

  // 4
  check_expectations(rec, 4, "", subject, n_max);
  {
    const CrystalParams p0{0, 1.0, 1.0, u};
    const CrystalParams p1{1, 1.0, 1.0, u};
    const CrystalParams p2{2, 1.0, 1.0, u};
    rec.bound(4, "expectation_potential N=0 = -1", std::abs(subject.expectation_potential(p0) + 1.0),
              1e-12);
    rec.bound(4, "expectation_kinetic N=0 = 0.5", std::abs(subject.expectation_kinetic(p0) - 0.5),
              1e-12);
    rec.bound(4, "expectation_potential N=1 = -1", std::abs(subject.expectation_potential(p1) + 1.0),
              1e-12);
    rec.bound(4, "expectation_potential N=2 ~ -2.729329",
              std::abs(subject.expectation_potential(p2) + 2.729329), 1e-6);
  }

  // 5
  for (double alpha : {0.5, 1.0, 2.0}) {
    const double a = 1.0;
    const DeltaPotentialProblem problem = two_sheet_problem(alpha, a);
    const BoundState g = ground_state(problem);
    rec.bound(5, fmt::format("two-sheet oracle energy alpha={}", alpha),
              std::abs(g.energy + 2.0 * alpha * alpha), 1e-8);
    const Segment& inner = g.wavefunction.segments()[1];
    const bool linear = inner.kind == SegmentKind::linear;
    rec.flag(5, fmt::format("two-sheet interior segment is constant-capable alpha={}", alpha),
             linear);
    rec.bound(5, fmt::format("two-sheet interior variation alpha={}", alpha),
              linear ? std::abs(inner.c2) * 2.0 * a / std::abs(inner.c1) : 1.0, 1e-8);

    // The same problem through the electrostatic route.
    const double sigma = sigma_from_alpha(alpha, u);
    const ElectrostaticSolution es = solve_sheets(SheetArray({{-a, sigma}, {a, sigma}}), u);
    const GroundStateSolution gs = ground_state_from_electrostatics(es, u);
    rec.bound(5, fmt::format("two-sheet dual energy alpha={}", alpha),
              std::abs(gs.energy + 2.0 * alpha * alpha), 1e-12);
    const DeltaPotentialProblem dual = to_quantum(es, u);
    rec.bound(5, fmt::format("two-sheet dual well depth alpha={}", alpha),
              std::abs(dual.region_offsets()[1] + 2.0 * alpha * alpha), 1e-12);
  }

  // 6
  {
    const std::vector<std::pair<std::string, SheetArray>> rejected = {
        {"single negative sheet", SheetArray({{0.0, -2.0}})},
        {"raw alternating N=1", raw_alternating_sheets(1, 2.0, 1.0)},
        {"raw alternating N=3", raw_alternating_sheets(3, 2.0, 1.0)},
        {"zero total density", SheetArray({{-1.0, 2.0}, {1.0, -2.0}})},
    };
    for (const auto& [label, sheets] : rejected) {
      const ElectrostaticSolution es = solve_sheets(sheets, u);
      const NormalizabilityCheck c = check_normalizable(es);
      bool threw = false;
      try {
        (void)ground_state_from_electrostatics(es, u);
      } catch (const NotNormalizable&) {
        threw = true;
      }
      rec.flag(6, "rejects " + label,
               !c.normalizable && c.reason.find("not normalizable") != std::string::npos && threw);
    }
    for (int N = 0; N <= 8; ++N) {
      const CanonicalCrystal crystal{N, 2.0, 1.0};
      rec.flag(6, fmt::format("accepts canonical crystal N={}", N),
               check_normalizable(solve_sheets(crystal.to_sheets(), u)).normalizable);
    }
  }

  // 7
  {
    double worst_b5 = 0.0;
    double worst_b7 = 0.0;
    double worst_18 = 0.0;
    for (int N = 0; N <= n_identity; ++N) {
      for (int n = -N; n <= N; ++n) {
        const IdentitySides s = identity_abs_sum(n, N);
        worst_b5 = std::max(worst_b5, std::abs(s.lhs - s.rhs));
      }
      for (int i = 0; i <= 40; ++i) {
        const double x = -5.0 + 0.25 * i;
        const IdentitySides b7 = identity_alternating_exp(N, x);
        const double scale7 = std::max(1.0, (N + 1) * std::exp(x) + N * std::exp(-x));
        worst_b7 = std::max(worst_b7, std::abs(b7.lhs - b7.rhs) / scale7);
        if (N >= 1) {
          const IdentitySides p = identity_sinh_parity(N, x);
          const double scale18 = std::max(1.0, N * std::abs(std::sinh(x)));
          worst_18 = std::max(worst_18, std::abs(p.lhs - p.rhs) / scale18);
        }
      }
    }
    rec.bound(7, fmt::format("identity_abs_sum exhaustive N<={}", n_identity), worst_b5, 1e-13);
    rec.bound(7, fmt::format("identity_alternating_exp N<={} x in [-5,5]", n_identity), worst_b7,
              1e-13);
    rec.bound(7, fmt::format("identity_sinh_parity N<={} x in [-5,5]", n_identity), worst_18,
              1e-13);
    check_segment_integral(rec, 7, "", subject.segment_integral_closed, n_identity);
  }

  // 8
  for (double alpha : {0.5, 1.0, 2.0}) {
    check_boundary_conditions(rec, fmt::format("single delta alpha={}", alpha), single_delta(alpha));
    check_boundary_conditions(rec, fmt::format("two-sheet alpha={}", alpha),
                              two_sheet_problem(alpha, 1.0));
    check_sheet_conditions(rec, fmt::format("single sheet sigma={}", 2 * alpha),
                           SheetArray({{0.0, 2.0 * alpha}}));
    check_sheet_conditions(rec, fmt::format("two sheets sigma={}", 2 * alpha),
                           SheetArray({{-1.0, 2.0 * alpha}, {1.0, 2.0 * alpha}}));
  }
  for (int N = 0; N <= n_max; ++N) {
    const CrystalParams p{N, 1.0, 1.0, u};
    check_boundary_conditions(rec, fmt::format("crystal N={}", N), ionic_crystal_potential(p));
    check_sheet_conditions(rec, fmt::format("crystal sheets N={}", N),
                           CanonicalCrystal{N, 2.0, 1.0}.to_sheets());
  }
  {
    const SheetArray quasi = quasicrystal_sheets();
    check_sheet_conditions(rec, "quasicrystal", quasi);
    check_boundary_conditions(rec, "quasicrystal", to_quantum(solve_sheets(quasi, u), u));
  }

  // 9
  for (int N = 1; N <= 4; ++N) check_figure(rec, N);

  // 10
  for (int N = 0; N <= n_max; ++N) {
    const DeltaPotentialProblem problem = ionic_crystal_potential({N, 1.0, 1.0, u});
    const BoundStateList first = find_bound_states(problem);
    const BoundStateList second = find_bound_states(problem);
    bool same = first.count() == second.count();
    for (std::size_t i = 0; same && i < first.count(); ++i) {
      same = first.states[i].energy == second.states[i].energy;
    }
    CountRow row;
    row.N = N;
    row.count = first.count();
    row.ground_energy = first.count() ? first.states.front().energy : 0.0;
    row.deterministic = same;
    report.bound_state_counts.push_back(row);
    rec.flag(10, fmt::format("bound-state count deterministic N={}", N), same);
    rec.bound(10, fmt::format("lowest state energy N={}", N),
              first.count() ? std::abs(row.ground_energy + 0.5) : 1.0, 1e-9);
    rec.flag(10, fmt::format("refinement pass clean N={}", N), !first.scan_too_coarse);
  }

  // Supplementary: the exact closed forms through the same oracles.
  const ClosedFormSubject exact = exact_closed_forms();
  check_normalization(rec, 0, "exact: ", exact, n_max);
  check_expectations(rec, 0, "exact: ", exact, n_max);
  check_segment_integral(rec, 0, "exact: ", exact.segment_integral_closed, n_identity);
  for (int N = 0; N <= n_max; ++N) {
    const CrystalParams p{N, 1.0, 1.0, u};
    const BoundState g = ground_state(ionic_crystal_potential(p));
    double worst = 0.0;
    const double half = (N + 3) * p.a;
    for (int i = 0; i < 200; ++i) {
      const double z = -half + 2.0 * half * i / 199.0;
      worst = std::max(worst, std::abs(g.wavefunction.value(z) - exact.psi(p, z)));
    }
    rec.bound(0, fmt::format("exact: psi_exact vs oracle wavefunction N={}", N), worst, 1e-8);
  }

  return report;
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  out << "depth: " << (report.depth == Depth::full ? "full" : "quick") << "\n\n";
  out << fmt::format("{:<6} {:<4} {:<72} {:>12} {:>10}\n", "status", "crit", "check", "measured",
                     "tolerance");
  for (const CheckResult& c : report.checks) {
    out << fmt::format("{:<6} {:<4} {:<72} {:>12.3e} {:>10.1e}\n", c.passed ? "PASS" : "FAIL",
                       c.criterion == 0 ? std::string("S") : std::to_string(c.criterion), c.name,
                       c.measured, c.tolerance);
  }
  out << "\ncriteria:\n";
  for (const CriterionSummary& s : report.summarize()) {
    out << fmt::format("{} {:>2} {:<40} checks={:<4} failures={:<4}", s.passed() ? "PASS" : "FAIL",
                       s.criterion == 0 ? std::string("S") : std::to_string(s.criterion), s.title,
                       s.checks, s.failures);
    if (!s.passed()) out << " first failure: " << s.first_failure;
    out << "\n";
  }
  out << "\nbound states of the crystal at alpha a = 1 (published claim: exactly one)\n";
  out << fmt::format("{:>3} {:>6} {:>22} {:>14}\n", "N", "count", "lowest energy", "deterministic");
  for (const CountRow& r : report.bound_state_counts) {
    out << fmt::format("{:>3} {:>6} {:>22.15g} {:>14}\n", r.N, r.count, r.ground_energy,
                       r.deterministic ? "yes" : "no");
  }
  return out.str();
}

} // namespace sheetcrystal
