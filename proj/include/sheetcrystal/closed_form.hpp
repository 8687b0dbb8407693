#pragma once

#include "sheetcrystal/potential.hpp"
#include "sheetcrystal/units.hpp"

namespace sheetcrystal {

/// Quantum-side parameters of the evenly spaced ionic crystal
/// U(z) = -alpha sum_{n=-N}^{N} (-1)^(n+N) delta(z - n a).
struct CrystalParams {
  int N = 0;
  double alpha = 1.0;
  double a = 1.0;
  UnitSystem units = UnitSystem::atomic();

  /// Throws std::invalid_argument unless N >= 0, alpha > 0, a > 0.
  void validate() const;
  /// Decay rate m alpha / hbar^2.
  double kappa() const noexcept;
};

/// The crystal as a delta problem (no offsets).
DeltaPotentialProblem ionic_crystal_potential(const CrystalParams& p);

/// -m alpha^2 / 2 hbar^2, independent of N and a.
double ground_energy(const CrystalParams& p);

// Two families of closed forms live here. The plain names evaluate the
// published expressions, whose normalization carries the odd-N parity factor
// [(1 - (-1)^N)/2]. They agree with exact integration for N <= 1 only. The
// *_exact names come from integrating psi^2 region by region: every site sits
// at exponent -kappa a N (attractive) or -kappa a (N + 1) (repulsive), and each
// of the 2N inner cells contributes (e^{-2 kappa a N} - e^{-2 kappa a (N+1)}) / 2 kappa,
// which replaces the parity factor by N.

/// ln A from A^-2 = (hbar^2/m alpha) e^{-2 kappa N a}
///   [1 + [(1 - (-1)^N)/2] (1 - e^{-2 kappa a})], evaluated in log space.
double log_normalization_constant(const CrystalParams& p);

/// A. N = 0 returns sqrt(m alpha)/hbar directly.
double normalization_constant(const CrystalParams& p);

/// ln A from A^-2 = (hbar^2/m alpha) e^{-2 kappa N a} [1 + N (1 - e^{-2 kappa a})].
double log_normalization_constant_exact(const CrystalParams& p);
double normalization_constant_exact(const CrystalParams& p);

/// -kappa sum_n (-1)^(n+N) |z - n a|, summed term by term.
double psi_exponent(const CrystalParams& p, double z);

/// normalization_constant(p) * exp(psi_exponent(p, z)).
double psi(const CrystalParams& p, double z);

/// normalization_constant_exact(p) * exp(psi_exponent(p, z)).
double psi_exact(const CrystalParams& p, double z);

/// The ratio (1 + 2N e^{-x} sinh x) / (1 + 2 e^{-x} [(1-(-1)^N)/2] sinh x),
/// x = kappa a.
double potential_ratio(const CrystalParams& p);

/// -(m alpha^2 / hbar^2) * potential_ratio(p).
double expectation_potential(const CrystalParams& p);
/// -(m alpha^2 / hbar^2) * (1/2 - potential_ratio(p)).
double expectation_kinetic(const CrystalParams& p);

/// |psi'| = kappa psi on every cell, so <T> = hbar^2 kappa^2 / 2m = -E and
/// <U> = 2E for every N.
double expectation_potential_exact(const CrystalParams& p);
double expectation_kinetic_exact(const CrystalParams& p);

/// Both sides of an algebraic identity; callers own the tolerance.
struct IdentitySides {
  double lhs;
  double rhs;
};

/// sum_{j=-N}^{N} (-1)^(j+N) |n - j|  vs  [(1 + 2N) - (-1)^(n+N)] / 2.
/// Throws IndexOutOfRange if |n| > N.
IdentitySides identity_abs_sum(int n, int N);

/// sum_{n=0}^{2N} (-1)^n e^{x (-1)^n}  vs  e^x + 2N sinh x.
IdentitySides identity_alternating_exp(int N, double x);

/// (-1)^N sum_{k=0}^{N-1} sinh((-1)^(k+N) x)  vs  [(1 - (-1)^N)/2] sinh x.
IdentitySides identity_sinh_parity(int N, double x);

/// Closed form of the integral of e^{f(z)} over [0, N a], with
/// f(z) = -s (sum_{n=0}^{N} (-1)^n |z + n a| + sum_{n=1}^{N} (-1)^n |z - n a|)
/// and s = sigma / (eps0 V0):
///   (2/s) e^{-s a (-1)^N (1 + 2N) / 2} sum_{k=0}^{N-1} sinh(s a (-1)^k / 2).
double segment_integral_closed(int N, double s, double a);

/// Exact value of the same integral. The exponent takes only the two values
/// -s a (-1)^N N and -s a (-1)^N (N+1) at the nodes z = k a, so every cell
/// contributes the same amount:
///   (2N/s) e^{-s a (-1)^N (1 + 2N) / 2} sinh(s a / 2).
double segment_integral_exact(int N, double s, double a);

/// The exponent f(z) above, summed directly.
double segment_exponent(int N, double s, double a, double z);

} // namespace sheetcrystal
