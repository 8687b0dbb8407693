#pragma once

namespace sheetcrystal {

/// The five constants shared by the electrostatic and quantum pictures.
///
/// Construction enforces V0^2 * eps0 * a0^3 == hbar^2 / mass (relative
/// tolerance 1e-12). With that constraint the exponential map
/// psi = A exp(V / V0) turns the sheet Poisson problem into a Schrodinger
/// problem with no leftover factors, so every other module can take a
/// UnitSystem by value and trust it.
class UnitSystem {
public:
  static constexpr double consistency_tolerance = 1e-12;

  /// Throws std::invalid_argument when a constant is not strictly positive
  /// and finite, or when the consistency constraint fails.
  UnitSystem(double hbar, double mass, double eps0, double V0, double a0);

  /// hbar = mass = eps0 = a0 = V0 = 1.
  static UnitSystem atomic() noexcept;

  /// Builds a consistent system from four constants by solving the
  /// constraint for V0.
  static UnitSystem with_derived_V0(double hbar, double mass, double eps0,
                                    double a0);

  double hbar() const noexcept { return hbar_; }
  double mass() const noexcept { return mass_; }
  double eps0() const noexcept { return eps0_; }
  double V0() const noexcept { return V0_; }
  double a0() const noexcept { return a0_; }

  /// hbar^2 / m, the kinetic prefactor doubled.
  double hbar2_over_m() const noexcept { return hbar_ * hbar_ / mass_; }

  friend bool operator==(const UnitSystem&, const UnitSystem&) = default;

private:
  struct Unchecked {};
  UnitSystem(Unchecked, double hbar, double mass, double eps0, double V0,
             double a0) noexcept
      : hbar_(hbar), mass_(mass), eps0_(eps0), V0_(V0), a0_(a0) {}

  double hbar_;
  double mass_;
  double eps0_;
  double V0_;
  double a0_;
};

/// Delta strength alpha (energy x length) carried by a sheet of density
/// sigma: alpha = sigma * V0 * a0^3 / 2. The a0^3 factor is unity in atomic
/// units.
double alpha_from_sigma(double sigma, const UnitSystem& units) noexcept;

double sigma_from_alpha(double alpha, const UnitSystem& units) noexcept;

} // namespace sheetcrystal
