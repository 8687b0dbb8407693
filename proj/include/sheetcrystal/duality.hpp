#pragma once

#include <string>

#include "sheetcrystal/electrostatics.hpp"
#include "sheetcrystal/potential.hpp"
#include "sheetcrystal/units.hpp"
#include "sheetcrystal/wavefunction.hpp"

namespace sheetcrystal {

/// Nodeless ground state obtained through psi = A exp(V / V0).
struct GroundStateSolution {
  double energy = 0.0;
  PiecewiseExpWavefunction wavefunction; ///< normalized
  double norm_constant = 0.0;            ///< A; may overflow to inf
  double log_norm_constant = 0.0;        ///< ln A, always finite
};

/// Maps each sheet to a delta of strength g_n = -sigma_n V0 a0^3 / 2 and each
/// region to the offset U_k = (eps0 / 2)(E_k^2 - E_inf^2) a0^3.
///
/// Throws AsymmetricAsymptoticField when the end-region field magnitudes
/// differ by more than 1e-12 (relative).
DeltaPotentialProblem to_quantum(const ElectrostaticSolution& sol,
                                 const UnitSystem& units);

struct NormalizabilityCheck {
  bool normalizable = false;
  std::string reason;
};

/// exp(V/V0) is square integrable iff V falls at both ends, which for a
/// sheet stack means a positive total density.
NormalizabilityCheck check_normalizable(const ElectrostaticSolution& sol);

/// Builds psi segmentwise as A exp(V(z) / V0) in the gauge stored in sol and
/// normalizes it by exact integration. Energy is -(eps0/2) E_inf^2 a0^3.
///
/// Throws NotNormalizable or AsymmetricAsymptoticField.
GroundStateSolution ground_state_from_electrostatics(const ElectrostaticSolution& sol,
                                                     const UnitSystem& units);

struct ResidualReport {
  double region = 0.0;     ///< max |(-/0/+) hbar^2 r^2 / 2m + U_k - E|
  double cusp = 0.0;       ///< max |dpsi'(z_n) - (2 m g_n / hbar^2) psi(z_n)|
  double continuity = 0.0; ///< max |psi(z_n^-) - psi(z_n^+)|
};

/// Checks that wavefunction and energy solve the Schrodinger equation for
/// the problem. Throws BreakpointMismatch when the site lists differ.
ResidualReport verify_schrodinger_residual(const DeltaPotentialProblem& problem,
                                           const PiecewiseExpWavefunction& psi,
                                           double energy);

inline ResidualReport verify_schrodinger_residual(const DeltaPotentialProblem& problem,
                                                  const GroundStateSolution& state) {
  return verify_schrodinger_residual(problem, state.wavefunction, state.energy);
}

} // namespace sheetcrystal
