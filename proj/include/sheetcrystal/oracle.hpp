#pragma once

#include <utility>
#include <vector>

#include "sheetcrystal/potential.hpp"
#include "sheetcrystal/units.hpp"
#include "sheetcrystal/wavefunction.hpp"

namespace sheetcrystal {

struct BoundState {
  double energy = 0.0;
  double kappa = 0.0; ///< asymptotic decay rate, E = -hbar^2 kappa^2 / 2m
  PiecewiseExpWavefunction wavefunction; ///< normalized, left tail positive
  double root_residual = 0.0;  ///< |matching function| at the root
  double cusp_residual = 0.0;
  double continuity_residual = 0.0;
};

struct ScanOptions {
  double kappa_max = 0.0; ///< <= 0 selects default_kappa_max(problem)
  int scan_points = 2048;
  double tol = 1e-13;     ///< bisection width in kappa
};

struct BoundStateList {
  std::vector<BoundState> states; ///< energies ascending
  double kappa_max = 0.0;
  int scan_points = 0;
  std::vector<std::pair<double, double>> brackets; ///< kappa brackets, ascending
  /// Set when some coarse cell held more than one root, or when the fine pass
  /// disagreed with the node count and the cell had to be split further.
  bool scan_too_coarse = false;

  std::size_t count() const noexcept { return states.size(); }
};

/// 4 max(2m|g_n|/hbar^2, sqrt(2m max|U_k|)/hbar), or 1 for an empty potential.
double default_kappa_max(const DeltaPotentialProblem& problem);

/// Coefficient of the growing tail e^{+kappa z} at +inf for the solution that
/// decays at -inf, at trial energy -hbar^2 kappa^2 / 2m. Scaled into [-1, 1]
/// by positive factors only, so its sign changes mark bound states.
double matching_function(const DeltaPotentialProblem& problem, double kappa);

/// Solution decaying at -inf for the given kappa, with the growing right-tail
/// component dropped. Not normalized.
PiecewiseExpWavefunction propagate_wavefunction(const DeltaPotentialProblem& problem,
                                                double kappa);

/// Scans kappa on (0, kappa_max] and bisects every sign change of the
/// matching function. Node counts of the trial solution confirm how many
/// roots each cell holds, so nearly degenerate pairs are not lost. An empty
/// list means the potential binds nothing.
BoundStateList find_bound_states(const DeltaPotentialProblem& problem,
                                 const ScanOptions& options = {});

/// Lowest state of find_bound_states; throws NoBoundStates when empty.
BoundState ground_state(const DeltaPotentialProblem& problem,
                        const ScanOptions& options = {});

/// sum_n g_n psi(z_n)^2 + sum_k U_k int_k psi^2, all exact.
/// Throws BreakpointMismatch when psi was built on other sites.
double expectation_potential_numeric(const PiecewiseExpWavefunction& psi,
                                     const DeltaPotentialProblem& problem);

/// (hbar^2 / 2m) int psi'^2, exact per segment.
double expectation_kinetic_numeric(const PiecewiseExpWavefunction& psi,
                                   const UnitSystem& units);

} // namespace sheetcrystal
