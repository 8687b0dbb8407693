#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sheetcrystal/units.hpp"

namespace sheetcrystal {

/// One infinite charged plane perpendicular to z.
struct Sheet {
  double position;
  double density; ///< surface charge density sigma
};

/// A finite stack of parallel charged sheets with strictly increasing
/// positions.
class SheetArray {
public:
  /// Throws std::invalid_argument on an empty list, non-finite values, or
  /// positions that are not strictly increasing (coincident sheets included).
  explicit SheetArray(std::vector<Sheet> sheets);

  std::span<const Sheet> sheets() const noexcept { return sheets_; }
  std::size_t size() const noexcept { return sheets_.size(); }
  double total_density() const noexcept;

  /// Union of two arrays; throws if any position coincides.
  SheetArray merged_with(const SheetArray& other) const;

private:
  std::vector<Sheet> sheets_;
};

/// Evenly spaced alternating crystal: 2N+1 sheets at z_n = n a with
/// sigma_n = sigma (-1)^(n+N), so both outermost sheets are positive.
struct CanonicalCrystal {
  int N;
  double sigma;
  double a;

  /// Throws std::invalid_argument unless N >= 0, sigma > 0, a > 0.
  SheetArray to_sheets() const;
};

/// Alternating crystal with the raw (-1)^n sign pattern. For odd N its
/// outer sheets carry -sigma, so the total density is negative.
SheetArray raw_alternating_sheets(int N, double sigma, double a);

/// Piecewise-constant field and piecewise-linear potential of a sheet stack.
///
/// Regions are indexed 0..M where M = breakpoints.size(); region 0 is
/// (-inf, z_0), region k is (z_{k-1}, z_k), region M is (z_{M-1}, +inf).
struct ElectrostaticSolution {
  std::vector<double> breakpoints;
  std::vector<double> densities;       ///< sigma at each breakpoint
  std::vector<double> region_fields;   ///< E_k, size M+1
  std::vector<double> potential_values; ///< V(z_k), size M
  std::vector<double> region_slopes;   ///< dV/dz per region, size M+1
  std::vector<double> region_energy_density; ///< eps0 E_k^2 / 2
  double E_inf = 0.0; ///< |field| in the rightmost region
  double eps0 = 1.0;

  std::size_t region_count() const noexcept { return region_fields.size(); }
  /// Region containing z; a point exactly on a breakpoint belongs to the
  /// region on its right.
  std::size_t region_of(double z) const noexcept;
};

/// Solves with the gauge V(z) = -(1/2 eps0) sum_n sigma_n |z - z_n|.
ElectrostaticSolution solve_sheets(const SheetArray& array,
                                   const UnitSystem& units);

/// Both one-sided fields at a sheet position.
struct BoundaryField {
  double left;
  double right;
};

using FieldSample = std::variant<double, BoundaryField>;

/// Field in the region containing z, or a BoundaryField when z sits exactly
/// on a sheet.
FieldSample field_at(const ElectrostaticSolution& sol, double z);

double potential_at(const ElectrostaticSolution& sol, double z);

/// The common |E_k| when every region shares one magnitude (relative
/// tolerance 1e-12), nullopt otherwise.
std::optional<double> uniform_field_magnitude(const ElectrostaticSolution& sol);

} // namespace sheetcrystal
