#pragma once

#include <vector>

namespace sheetcrystal {

/// Local solution basis of -psi'' + q psi = 0 on one region.
enum class SegmentKind {
  exponential, ///< c1 e^{r t} + c2 e^{-r t}, q = r^2 > 0
  linear,      ///< c1 + c2 t, q = 0
  oscillatory, ///< c1 cos(r t) + c2 sin(r t), q = -r^2 < 0
};

/// One region of a piecewise wavefunction; t = z - origin.
struct Segment {
  SegmentKind kind = SegmentKind::exponential;
  double rate = 0.0;
  double origin = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  double value(double z) const noexcept;
  double derivative(double z) const noexcept;
  /// Exact integral of value^2 over [lo, hi] (finite bounds).
  double integral_sq(double lo, double hi) const noexcept;
  /// Exact integral of derivative^2 over [lo, hi] (finite bounds).
  double integral_dsq(double lo, double hi) const noexcept;
};

/// Wavefunction assembled from closed-form segments between breakpoints.
///
/// Segment 0 covers (-inf, z_0) and segment M covers (z_{M-1}, +inf). The end
/// segments are exponential with their origin on the adjacent breakpoint; a
/// normalizable tail keeps only c1 on the left and only c2 on the right.
class PiecewiseExpWavefunction {
public:
  PiecewiseExpWavefunction() = default;
  PiecewiseExpWavefunction(std::vector<double> breakpoints,
                           std::vector<Segment> segments);

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  bool normalized() const noexcept { return normalized_; }

  std::size_t region_of(double z) const noexcept;
  double value(double z) const noexcept;
  double derivative(double z) const noexcept;

  /// One-sided limits at breakpoint i.
  double value_left(std::size_t i) const noexcept;
  double value_right(std::size_t i) const noexcept;
  double slope_left(std::size_t i) const noexcept;
  double slope_right(std::size_t i) const noexcept;

  /// Exact integral of psi^2 over region k. Throws DivergentTail for a
  /// growing end component.
  double region_norm_squared(std::size_t k) const;

  /// Multiplies every coefficient by factor.
  void scale(double factor) noexcept;
  /// Scales to unit norm and marks the function normalized.
  void normalize();

  /// max_i |psi(z_i^-) - psi(z_i^+)|.
  double continuity_residual() const noexcept;

private:
  std::vector<double> breakpoints_;
  std::vector<Segment> segments_;
  bool normalized_ = false;
};

/// Exact integral of psi^2 over the real line.
double norm_squared(const PiecewiseExpWavefunction& psi);

/// Exact integral of psi'^2 over the real line.
double derivative_norm_squared(const PiecewiseExpWavefunction& psi);

} // namespace sheetcrystal
