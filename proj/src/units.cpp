#include "sheetcrystal/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sheetcrystal {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string("unit constant '") + name +
                                "' must be finite and > 0, got " +
                                std::to_string(value));
  }
}

} // namespace

UnitSystem::UnitSystem(double hbar, double mass, double eps0, double V0,
                       double a0)
    : hbar_(hbar), mass_(mass), eps0_(eps0), V0_(V0), a0_(a0) {
  require_positive(hbar, "hbar");
  require_positive(mass, "mass");
  require_positive(eps0, "eps0");
  require_positive(V0, "V0");
  require_positive(a0, "a0");

  const double lhs = V0 * V0 * eps0 * a0 * a0 * a0;
  const double rhs = hbar * hbar / mass;
  if (std::abs(lhs - rhs) > consistency_tolerance * std::abs(rhs)) {
    throw std::invalid_argument(
        "inconsistent unit system: V0^2 * eps0 * a0^3 must equal hbar^2 / m");
  }
}

UnitSystem UnitSystem::atomic() noexcept {
  return UnitSystem(Unchecked{}, 1.0, 1.0, 1.0, 1.0, 1.0);
}

UnitSystem UnitSystem::with_derived_V0(double hbar, double mass, double eps0,
                                       double a0) {
  require_positive(hbar, "hbar");
  require_positive(mass, "mass");
  require_positive(eps0, "eps0");
  require_positive(a0, "a0");
  const double V0 = hbar / std::sqrt(mass * eps0 * a0 * a0 * a0);
  return UnitSystem(hbar, mass, eps0, V0, a0);
}

double alpha_from_sigma(double sigma, const UnitSystem& units) noexcept {
  const double a0 = units.a0();
  return sigma * (units.V0() * a0 * a0 * a0) / 2.0;
}

double sigma_from_alpha(double alpha, const UnitSystem& units) noexcept {
  const double a0 = units.a0();
  return 2.0 * alpha / (units.V0() * a0 * a0 * a0);
}

} // namespace sheetcrystal
