#include <doctest.h>

#include <sheetcrystal/errors.hpp>
#include <sheetcrystal/wavefunction.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

using namespace sheetcrystal;

namespace {

double gk(auto f, double lo, double hi) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 12, 1e-14);
}

// psi = e^{-|z|}: left tail e^{t}, right tail e^{-t}, both anchored at 0.
PiecewiseExpWavefunction cusp() {
  return PiecewiseExpWavefunction(
      {0.0}, {Segment{SegmentKind::exponential, 1.0, 0.0, 1.0, 0.0},
              Segment{SegmentKind::exponential, 1.0, 0.0, 0.0, 1.0}});
}

} // namespace

TEST_CASE("e^{-|z|} has unit norm") {
  auto psi = cusp();
  CHECK(norm_squared(psi) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(derivative_norm_squared(psi) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(psi.value(0.0) == 1.0);
  CHECK(psi.value(-2.0) == doctest::Approx(std::exp(-2.0)));
  CHECK(psi.slope_left(0) == 1.0);
  CHECK(psi.slope_right(0) == -1.0);
  CHECK(psi.continuity_residual() == 0.0);
}

TEST_CASE("normalize scales to unit norm") {
  auto psi = cusp();
  psi.scale(3.0);
  CHECK(norm_squared(psi) == doctest::Approx(9.0));
  CHECK_FALSE(psi.normalized());
  psi.normalize();
  CHECK(psi.normalized());
  CHECK(std::abs(norm_squared(psi) - 1.0) < 1e-14);
}

TEST_CASE("growing tails are divergent") {
  const PiecewiseExpWavefunction grow_right(
      {0.0}, {Segment{SegmentKind::exponential, 1.0, 0.0, 1.0, 0.0},
              Segment{SegmentKind::exponential, 1.0, 0.0, 0.5, 1.0}});
  CHECK_THROWS_AS(norm_squared(grow_right), DivergentTail);
  CHECK_THROWS_AS(grow_right.region_norm_squared(1), DivergentTail);
  CHECK_NOTHROW(grow_right.region_norm_squared(0));
  const PiecewiseExpWavefunction grow_left(
      {0.0}, {Segment{SegmentKind::exponential, 1.0, 0.0, 1.0, 0.2},
              Segment{SegmentKind::exponential, 1.0, 0.0, 0.0, 1.0}});
  CHECK_THROWS_AS(norm_squared(grow_left), DivergentTail);
}

TEST_CASE("segment integrals agree with quadrature") {
  const Segment segs[] = {
      {SegmentKind::exponential, 1.7, 0.3, 0.8, -1.2},
      {SegmentKind::exponential, 1e-7, -0.5, 2.0, 0.5},
      {SegmentKind::linear, 0.0, 1.0, 0.4, -0.9},
      {SegmentKind::linear, 0.0, 1.0, 1.5, 0.0},
      {SegmentKind::oscillatory, 2.3, 0.1, 0.7, 1.1},
      {SegmentKind::oscillatory, 1e-6, 0.0, -0.3, 0.6},
  };
  for (const auto& s : segs) {
    for (auto [lo, hi] : {std::pair{-1.0, 2.0}, std::pair{0.25, 0.5}, std::pair{-3.0, -2.0}}) {
      const double sq = gk([&](double z) { return s.value(z) * s.value(z); }, lo, hi);
      const double dsq = gk([&](double z) { return s.derivative(z) * s.derivative(z); }, lo, hi);
      CHECK(std::abs(s.integral_sq(lo, hi) - sq) <= 1e-12 * std::max(1.0, std::abs(sq)));
      CHECK(std::abs(s.integral_dsq(lo, hi) - dsq) <= 1e-12 * std::max(1.0, std::abs(dsq)));
    }
  }
}

TEST_CASE("derivative matches finite differences") {
  const Segment s{SegmentKind::oscillatory, 1.3, 0.2, 0.6, -0.4};
  const double h = 1e-6;
  for (double z : {-1.0, 0.0, 0.9}) {
    CHECK(s.derivative(z) ==
          doctest::Approx((s.value(z + h) - s.value(z - h)) / (2 * h)).epsilon(1e-8));
  }
}

TEST_CASE("continuity residual sees a jump") {
  const PiecewiseExpWavefunction jump(
      {0.0, 1.0}, {Segment{SegmentKind::exponential, 1.0, 0.0, 1.0, 0.0},
                   Segment{SegmentKind::linear, 0.0, 0.0, 1.0, 0.0},
                   Segment{SegmentKind::exponential, 1.0, 1.0, 0.0, 0.75}});
  CHECK(jump.continuity_residual() == doctest::Approx(0.25));
  CHECK(jump.region_of(0.5) == 1);
  CHECK(jump.region_of(1.0) == 2);
  CHECK(norm_squared(jump) == doctest::Approx(0.5 + 1.0 + 0.75 * 0.75 / 2));
}

TEST_CASE("construction is validated") {
  CHECK_THROWS_AS(PiecewiseExpWavefunction({0.0}, {Segment{}}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseExpWavefunction(
                      {0.0}, {Segment{SegmentKind::linear, 0.0, 0.0, 1.0, 0.0},
                              Segment{SegmentKind::exponential, 1.0, 0.0, 0.0, 1.0}}),
                  std::invalid_argument);
}
