#include "sheetcrystal/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sheetcrystal {

DeltaPotentialProblem::DeltaPotentialProblem(std::vector<double> positions,
                                             std::vector<double> strengths,
                                             std::vector<double> region_offsets,
                                             UnitSystem units)
    : positions_(std::move(positions)),
      strengths_(std::move(strengths)),
      offsets_(std::move(region_offsets)),
      units_(units) {
  if (positions_.empty()) {
    throw std::invalid_argument("potential needs at least one site");
  }
  if (strengths_.size() != positions_.size()) {
    throw std::invalid_argument("one strength per site is required");
  }
  if (offsets_.size() != positions_.size() + 1) {
    throw std::invalid_argument("region offsets must number sites + 1");
  }
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (!std::isfinite(positions_[i]) || !std::isfinite(strengths_[i])) {
      throw std::invalid_argument("site positions and strengths must be finite");
    }
    if (i > 0 && !(positions_[i - 1] < positions_[i])) {
      throw std::invalid_argument("site positions must be strictly increasing");
    }
  }
  for (double u : offsets_) {
    if (!std::isfinite(u)) throw std::invalid_argument("region offsets must be finite");
  }
  if (offsets_.front() != 0.0 || offsets_.back() != 0.0) {
    throw std::invalid_argument("end-region offsets must be zero");
  }
}

DeltaPotentialProblem::DeltaPotentialProblem(std::vector<double> positions,
                                             std::vector<double> strengths,
                                             UnitSystem units)
    : DeltaPotentialProblem(positions, std::move(strengths),
                            std::vector<double>(positions.size() + 1, 0.0),
                            units) {}

std::size_t DeltaPotentialProblem::region_of(double z) const noexcept {
  return static_cast<std::size_t>(
      std::upper_bound(positions_.begin(), positions_.end(), z) -
      positions_.begin());
}

double DeltaPotentialProblem::offset_at(double z) const noexcept {
  return offsets_[region_of(z)];
}

} // namespace sheetcrystal
