#include "sheetcrystal/duality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sheetcrystal/errors.hpp"

namespace sheetcrystal {

namespace {

void require_symmetric_ends(const ElectrostaticSolution& sol) {
  const double left = std::abs(sol.region_fields.front());
  const double right = std::abs(sol.region_fields.back());
  if (std::abs(left - right) > 1e-12 * std::max(left, right)) {
    std::ostringstream msg;
    msg << "end-region field magnitudes differ (" << left << " vs " << right
        << "); the asymptotic energy density is ambiguous";
    throw AsymmetricAsymptoticField(msg.str());
  }
}

} // namespace

DeltaPotentialProblem to_quantum(const ElectrostaticSolution& sol,
                                 const UnitSystem& units) {
  require_symmetric_ends(sol);
  const double a0_cubed = units.a0() * units.a0() * units.a0();
  const double e_inf2 = sol.E_inf * sol.E_inf;

  std::vector<double> strengths;
  strengths.reserve(sol.densities.size());
  for (double sigma : sol.densities) {
    strengths.push_back(-alpha_from_sigma(sigma, units));
  }

  std::vector<double> offsets(sol.region_count(), 0.0);
  for (std::size_t k = 1; k + 1 < offsets.size(); ++k) {
    const double field = sol.region_fields[k];
    offsets[k] = 0.5 * units.eps0() * (field * field - e_inf2) * a0_cubed;
  }
  return DeltaPotentialProblem(sol.breakpoints, std::move(strengths),
                               std::move(offsets), units);
}

NormalizabilityCheck check_normalizable(const ElectrostaticSolution& sol) {
  const double left_slope = sol.region_slopes.front();
  const double right_slope = sol.region_slopes.back();
  const bool left_ok = left_slope > 0.0;
  const bool right_ok = right_slope < 0.0;
  if (left_ok && right_ok) return {true, {}};

  double total = 0.0;
  for (double sigma : sol.densities) total += sigma;
  std::ostringstream msg;
  msg << "not normalizable: ";
  if (!left_ok && !right_ok) {
    msg << "V(z) does not decrease toward either end";
  } else if (!left_ok) {
    msg << "V(z) does not decrease as z -> -inf";
  } else {
    msg << "V(z) does not decrease as z -> +inf";
  }
  msg << " (total sheet density " << total
      << " <= 0), so exp(V/V0) diverges; the outermost sheets must leave a "
         "net positive charge";
  return {false, msg.str()};
}

GroundStateSolution ground_state_from_electrostatics(const ElectrostaticSolution& sol,
                                                     const UnitSystem& units) {
  const NormalizabilityCheck gate = check_normalizable(sol);
  if (!gate.normalizable) throw NotNormalizable(gate.reason);
  require_symmetric_ends(sol);

  const double V0 = units.V0();
  const std::size_t M = sol.breakpoints.size();

  // ln psi at the breakpoints up to the constant ln A; the maximum of a
  // piecewise-linear function with falling tails sits on a breakpoint.
  std::vector<double> log_values(M);
  for (std::size_t i = 0; i < M; ++i) log_values[i] = sol.potential_values[i] / V0;
  const double shift = *std::max_element(log_values.begin(), log_values.end());

  std::vector<Segment> segments(M + 1);
  for (std::size_t k = 0; k <= M; ++k) {
    const std::size_t anchor = (k == 0) ? 0 : k - 1;
    const double value = std::exp(log_values[anchor] - shift);
    const double slope = sol.region_slopes[k] / V0;
    Segment& seg = segments[k];
    seg.origin = sol.breakpoints[anchor];
    if (slope > 0.0) {
      seg = {SegmentKind::exponential, slope, seg.origin, value, 0.0};
    } else if (slope < 0.0) {
      seg = {SegmentKind::exponential, -slope, seg.origin, 0.0, value};
    } else {
      seg = {SegmentKind::linear, 0.0, seg.origin, value, 0.0};
    }
  }

  GroundStateSolution out;
  out.wavefunction = PiecewiseExpWavefunction(sol.breakpoints, std::move(segments));
  const double norm = norm_squared(out.wavefunction);
  out.wavefunction.normalize();
  out.log_norm_constant = -shift - 0.5 * std::log(norm);
  out.norm_constant = std::exp(out.log_norm_constant);
  const double a0 = units.a0();
  out.energy = -0.5 * units.eps0() * sol.E_inf * sol.E_inf * a0 * a0 * a0;
  return out;
}

ResidualReport verify_schrodinger_residual(const DeltaPotentialProblem& problem,
                                           const PiecewiseExpWavefunction& psi,
                                           double energy) {
  const auto& sites = problem.positions();
  const auto& bp = psi.breakpoints();
  if (sites.size() != bp.size()) {
    throw BreakpointMismatch("wavefunction and potential have different site counts");
  }
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (std::abs(sites[i] - bp[i]) > 1e-12 * std::max(1.0, std::abs(sites[i]))) {
      throw BreakpointMismatch("wavefunction breakpoint " + std::to_string(i) +
                               " does not match the potential site");
    }
  }

  const double h2m = problem.units().hbar2_over_m();
  const auto& offsets = problem.region_offsets();
  const auto& strengths = problem.strengths();

  ResidualReport report;
  for (std::size_t k = 0; k < psi.segments().size(); ++k) {
    const Segment& seg = psi.segments()[k];
    double curvature = 0.0; // psi'' / psi
    switch (seg.kind) {
    case SegmentKind::exponential: curvature = seg.rate * seg.rate; break;
    case SegmentKind::linear: curvature = 0.0; break;
    case SegmentKind::oscillatory: curvature = -seg.rate * seg.rate; break;
    }
    const double residual = std::abs(0.5 * h2m * curvature - (offsets[k] - energy));
    report.region = std::max(report.region, residual);
  }
  for (std::size_t i = 0; i < bp.size(); ++i) {
    const double jump = psi.slope_right(i) - psi.slope_left(i);
    const double expected = 2.0 * strengths[i] / h2m * psi.value_right(i);
    report.cusp = std::max(report.cusp, std::abs(jump - expected));
  }
  report.continuity = psi.continuity_residual();
  return report;
}

} // namespace sheetcrystal
