#pragma once

#include <vector>

#include "sheetcrystal/units.hpp"

namespace sheetcrystal {

/// U(z) = sum_n g_n delta(z - z_n) + U_k on region k.
///
/// Regions follow the same indexing as ElectrostaticSolution: region 0 lies
/// left of the first site, region M right of the last. Offsets are measured
/// from the asymptotic value, so both end offsets are zero. A site may carry
/// g = 0 when it only marks an offset step.
class DeltaPotentialProblem {
public:
  /// Throws std::invalid_argument on non-increasing or non-finite positions,
  /// a size mismatch, or non-zero end offsets.
  DeltaPotentialProblem(std::vector<double> positions,
                        std::vector<double> strengths,
                        std::vector<double> region_offsets, UnitSystem units);

  /// Deltas only; every offset is zero.
  DeltaPotentialProblem(std::vector<double> positions,
                        std::vector<double> strengths, UnitSystem units);

  const std::vector<double>& positions() const noexcept { return positions_; }
  const std::vector<double>& strengths() const noexcept { return strengths_; }
  const std::vector<double>& region_offsets() const noexcept { return offsets_; }
  const UnitSystem& units() const noexcept { return units_; }

  std::size_t site_count() const noexcept { return positions_.size(); }
  std::size_t region_count() const noexcept { return offsets_.size(); }
  std::size_t region_of(double z) const noexcept;

  /// Offset U_k of the region containing z (right region on a site).
  double offset_at(double z) const noexcept;

private:
  std::vector<double> positions_;
  std::vector<double> strengths_;
  std::vector<double> offsets_;
  UnitSystem units_;
};

} // namespace sheetcrystal
