#include "sheetcrystal/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sheetcrystal/errors.hpp"

namespace sheetcrystal {

namespace {

// Integral over t in [t0, t1] of the products e^{2rt}, e^{-2rt}, 1.
struct ExpMoments {
  double grow;
  double decay;
  double cross;
};

ExpMoments exp_moments(double r, double t0, double t1) noexcept {
  const double w = t1 - t0;
  // e^{2 r t0} (e^{2 r w} - 1) / 2r, with expm1 for small r w.
  const double grow = std::exp(2.0 * r * t0) * std::expm1(2.0 * r * w) / (2.0 * r);
  const double decay = -std::exp(-2.0 * r * t0) * std::expm1(-2.0 * r * w) / (2.0 * r);
  return {grow, decay, w};
}

} // namespace

double Segment::value(double z) const noexcept {
  const double t = z - origin;
  switch (kind) {
  case SegmentKind::exponential: {
    double v = 0.0;
    if (c1 != 0.0) v += c1 * std::exp(rate * t);
    if (c2 != 0.0) v += c2 * std::exp(-rate * t);
    return v;
  }
  case SegmentKind::linear:
    return c1 + c2 * t;
  case SegmentKind::oscillatory:
    return c1 * std::cos(rate * t) + c2 * std::sin(rate * t);
  }
  return 0.0;
}

double Segment::derivative(double z) const noexcept {
  const double t = z - origin;
  switch (kind) {
  case SegmentKind::exponential: {
    double v = 0.0;
    if (c1 != 0.0) v += c1 * rate * std::exp(rate * t);
    if (c2 != 0.0) v -= c2 * rate * std::exp(-rate * t);
    return v;
  }
  case SegmentKind::linear:
    return c2;
  case SegmentKind::oscillatory:
    return rate * (c2 * std::cos(rate * t) - c1 * std::sin(rate * t));
  }
  return 0.0;
}

double Segment::integral_sq(double lo, double hi) const noexcept {
  const double t0 = lo - origin;
  const double t1 = hi - origin;
  const double w = hi - lo;
  switch (kind) {
  case SegmentKind::exponential: {
    if (rate == 0.0) return (c1 + c2) * (c1 + c2) * w;
    const ExpMoments m = exp_moments(rate, t0, t1);
    double s = 0.0;
    if (c1 != 0.0) s += c1 * c1 * m.grow;
    if (c2 != 0.0) s += c2 * c2 * m.decay;
    return s + 2.0 * c1 * c2 * m.cross;
  }
  case SegmentKind::linear: {
    // integral of (c1 + c2 t)^2 = [(c1 + c2 t)^3 / 3 c2] unless c2 == 0.
    const double cube = (t1 * t1 * t1 - t0 * t0 * t0) / 3.0;
    const double sq = (t1 * t1 - t0 * t0) / 2.0;
    return c1 * c1 * w + 2.0 * c1 * c2 * sq + c2 * c2 * cube;
  }
  case SegmentKind::oscillatory: {
    const double k = rate;
    // product forms of the sin/cos differences; no cancellation for small k w
    const double sw = std::sin(k * w) / k;
    const double s2 = std::cos(k * (t0 + t1)) * sw / 2.0;
    const double c2k = std::sin(k * (t0 + t1)) * sw;
    return c1 * c1 * (w / 2.0 + s2) + c2 * c2 * (w / 2.0 - s2) + c1 * c2 * c2k;
  }
  }
  return 0.0;
}

double Segment::integral_dsq(double lo, double hi) const noexcept {
  const double t0 = lo - origin;
  const double t1 = hi - origin;
  const double w = hi - lo;
  switch (kind) {
  case SegmentKind::exponential: {
    if (rate == 0.0) return 0.0;
    const ExpMoments m = exp_moments(rate, t0, t1);
    double s = 0.0;
    if (c1 != 0.0) s += c1 * c1 * m.grow;
    if (c2 != 0.0) s += c2 * c2 * m.decay;
    return rate * rate * (s - 2.0 * c1 * c2 * m.cross);
  }
  case SegmentKind::linear:
    return c2 * c2 * w;
  case SegmentKind::oscillatory: {
    const double k = rate;
    const double sw = std::sin(k * w) / k;
    const double s2 = std::cos(k * (t0 + t1)) * sw / 2.0;
    const double c2k = std::sin(k * (t0 + t1)) * sw;
    return k * k * (c1 * c1 * (w / 2.0 - s2) + c2 * c2 * (w / 2.0 + s2) - c1 * c2 * c2k);
  }
  }
  return 0.0;
}

PiecewiseExpWavefunction::PiecewiseExpWavefunction(std::vector<double> breakpoints,
                                                   std::vector<Segment> segments)
    : breakpoints_(std::move(breakpoints)), segments_(std::move(segments)) {
  if (breakpoints_.empty() || segments_.size() != breakpoints_.size() + 1) {
    throw std::invalid_argument("wavefunction needs M >= 1 breakpoints and M + 1 segments");
  }
  if (segments_.front().kind != SegmentKind::exponential ||
      segments_.back().kind != SegmentKind::exponential) {
    throw std::invalid_argument("end segments must be exponential");
  }
}

std::size_t PiecewiseExpWavefunction::region_of(double z) const noexcept {
  return static_cast<std::size_t>(
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), z) -
      breakpoints_.begin());
}

double PiecewiseExpWavefunction::value(double z) const noexcept {
  return segments_[region_of(z)].value(z);
}

double PiecewiseExpWavefunction::derivative(double z) const noexcept {
  return segments_[region_of(z)].derivative(z);
}

double PiecewiseExpWavefunction::value_left(std::size_t i) const noexcept {
  return segments_[i].value(breakpoints_[i]);
}
double PiecewiseExpWavefunction::value_right(std::size_t i) const noexcept {
  return segments_[i + 1].value(breakpoints_[i]);
}
double PiecewiseExpWavefunction::slope_left(std::size_t i) const noexcept {
  return segments_[i].derivative(breakpoints_[i]);
}
double PiecewiseExpWavefunction::slope_right(std::size_t i) const noexcept {
  return segments_[i + 1].derivative(breakpoints_[i]);
}

double PiecewiseExpWavefunction::region_norm_squared(std::size_t k) const {
  const Segment& seg = segments_[k];
  const std::size_t M = breakpoints_.size();
  if (k == 0 || k == M) {
    const bool left = (k == 0);
    const double growing = left ? seg.c2 : seg.c1;
    const double decaying = left ? seg.c1 : seg.c2;
    if (growing != 0.0 || !(seg.rate > 0.0)) {
      throw DivergentTail(left ? "left tail does not decay toward -inf"
                               : "right tail does not decay toward +inf");
    }
    // Tail integral from the breakpoint outwards.
    const double edge = left ? breakpoints_.front() : breakpoints_.back();
    const double t = edge - seg.origin;
    const double at_edge = decaying * std::exp((left ? 1.0 : -1.0) * seg.rate * t);
    return at_edge * at_edge / (2.0 * seg.rate);
  }
  return seg.integral_sq(breakpoints_[k - 1], breakpoints_[k]);
}

void PiecewiseExpWavefunction::scale(double factor) noexcept {
  for (Segment& s : segments_) {
    s.c1 *= factor;
    s.c2 *= factor;
  }
}

void PiecewiseExpWavefunction::normalize() {
  scale(1.0 / std::sqrt(norm_squared(*this)));
  normalized_ = true;
}

double PiecewiseExpWavefunction::continuity_residual() const noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    worst = std::max(worst, std::abs(value_left(i) - value_right(i)));
  }
  return worst;
}

double norm_squared(const PiecewiseExpWavefunction& psi) {
  double total = 0.0;
  for (std::size_t k = 0; k < psi.segments().size(); ++k) {
    total += psi.region_norm_squared(k);
  }
  return total;
}

double derivative_norm_squared(const PiecewiseExpWavefunction& psi) {
  const auto& bp = psi.breakpoints();
  const auto& segs = psi.segments();
  const std::size_t M = bp.size();
  double total = 0.0;
  // Tails: psi' = +-r psi, so the integral is r^2 times the tail norm.
  total += segs.front().rate * segs.front().rate * psi.region_norm_squared(0);
  total += segs.back().rate * segs.back().rate * psi.region_norm_squared(M);
  for (std::size_t k = 1; k < M; ++k) {
    total += segs[k].integral_dsq(bp[k - 1], bp[k]);
  }
  return total;
}

} // namespace sheetcrystal
