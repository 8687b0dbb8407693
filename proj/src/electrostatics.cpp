#include "sheetcrystal/electrostatics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sheetcrystal {

SheetArray::SheetArray(std::vector<Sheet> sheets) : sheets_(std::move(sheets)) {
  if (sheets_.empty()) {
    throw std::invalid_argument("sheet array must not be empty");
  }
  for (std::size_t i = 0; i < sheets_.size(); ++i) {
    const Sheet& s = sheets_[i];
    if (!std::isfinite(s.position) || !std::isfinite(s.density)) {
      throw std::invalid_argument("sheet " + std::to_string(i) +
                                  " has a non-finite position or density");
    }
    if (i > 0 && !(sheets_[i - 1].position < s.position)) {
      throw std::invalid_argument(
          "sheet positions must be strictly increasing (sheet " +
          std::to_string(i) + ")");
    }
  }
}

double SheetArray::total_density() const noexcept {
  double total = 0.0;
  for (const Sheet& s : sheets_) total += s.density;
  return total;
}

SheetArray SheetArray::merged_with(const SheetArray& other) const {
  std::vector<Sheet> all(sheets_.begin(), sheets_.end());
  all.insert(all.end(), other.sheets_.begin(), other.sheets_.end());
  std::sort(all.begin(), all.end(),
            [](const Sheet& l, const Sheet& r) { return l.position < r.position; });
  return SheetArray(std::move(all));
}

SheetArray CanonicalCrystal::to_sheets() const {
  if (N < 0 || !(sigma > 0.0) || !(a > 0.0) || !std::isfinite(sigma) ||
      !std::isfinite(a)) {
    throw std::invalid_argument("canonical crystal needs N >= 0, sigma > 0, a > 0");
  }
  std::vector<Sheet> sheets;
  sheets.reserve(static_cast<std::size_t>(2 * N + 1));
  for (int n = -N; n <= N; ++n) {
    const double sign = ((n + N) % 2 == 0) ? 1.0 : -1.0;
    sheets.push_back({n * a, sign * sigma});
  }
  return SheetArray(std::move(sheets));
}

SheetArray raw_alternating_sheets(int N, double sigma, double a) {
  if (N < 0 || !(a > 0.0)) {
    throw std::invalid_argument("alternating array needs N >= 0 and a > 0");
  }
  std::vector<Sheet> sheets;
  for (int n = -N; n <= N; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    sheets.push_back({n * a, sign * sigma});
  }
  return SheetArray(std::move(sheets));
}

std::size_t ElectrostaticSolution::region_of(double z) const noexcept {
  return static_cast<std::size_t>(
      std::upper_bound(breakpoints.begin(), breakpoints.end(), z) -
      breakpoints.begin());
}

ElectrostaticSolution solve_sheets(const SheetArray& array,
                                   const UnitSystem& units) {
  const auto sheets = array.sheets();
  const std::size_t M = sheets.size();
  const double eps0 = units.eps0();

  ElectrostaticSolution sol;
  sol.eps0 = eps0;
  sol.breakpoints.reserve(M);
  sol.densities.reserve(M);
  for (const Sheet& s : sheets) {
    sol.breakpoints.push_back(s.position);
    sol.densities.push_back(s.density);
  }

  // Region k has sheets 0..k-1 on its left and k..M-1 on its right.
  const double total = array.total_density();
  double left = 0.0;
  sol.region_fields.resize(M + 1);
  sol.region_slopes.resize(M + 1);
  sol.region_energy_density.resize(M + 1);
  for (std::size_t k = 0; k <= M; ++k) {
    if (k > 0) left += sheets[k - 1].density;
    const double right = total - left;
    const double field = (left - right) / (2.0 * eps0);
    sol.region_fields[k] = field;
    sol.region_slopes[k] = -field;
    sol.region_energy_density[k] = 0.5 * eps0 * field * field;
  }
  // Exact end values avoid the rounding of the running sum.
  sol.region_fields.front() = -total / (2.0 * eps0);
  sol.region_fields.back() = total / (2.0 * eps0);
  sol.region_slopes.front() = -sol.region_fields.front();
  sol.region_slopes.back() = -sol.region_fields.back();

  sol.potential_values.resize(M);
  for (std::size_t i = 0; i < M; ++i) {
    double sum = 0.0;
    for (const Sheet& s : sheets) sum += s.density * std::abs(sheets[i].position - s.position);
    sol.potential_values[i] = -sum / (2.0 * eps0);
  }
  sol.E_inf = std::abs(sol.region_fields.back());
  return sol;
}

FieldSample field_at(const ElectrostaticSolution& sol, double z) {
  const auto it = std::lower_bound(sol.breakpoints.begin(), sol.breakpoints.end(), z);
  if (it != sol.breakpoints.end() && *it == z) {
    const auto i = static_cast<std::size_t>(it - sol.breakpoints.begin());
    return BoundaryField{sol.region_fields[i], sol.region_fields[i + 1]};
  }
  return sol.region_fields[sol.region_of(z)];
}

double potential_at(const ElectrostaticSolution& sol, double z) {
  const std::size_t k = sol.region_of(z);
  // Anchor on the nearest breakpoint bounding the region.
  const std::size_t anchor = (k == 0) ? 0 : k - 1;
  return sol.potential_values[anchor] +
         sol.region_slopes[k] * (z - sol.breakpoints[anchor]);
}

std::optional<double> uniform_field_magnitude(const ElectrostaticSolution& sol) {
  const double ref = std::abs(sol.region_fields.front());
  for (double field : sol.region_fields) {
    if (std::abs(std::abs(field) - ref) > 1e-12 * std::max(ref, std::abs(field))) {
      return std::nullopt;
    }
  }
  return ref;
}

} // namespace sheetcrystal
