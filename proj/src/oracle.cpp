#include "sheetcrystal/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/tools/roots.hpp>

#include "sheetcrystal/duality.hpp"
#include "sheetcrystal/errors.hpp"

namespace sheetcrystal {

namespace {

constexpr double regime_tolerance = 1e-12;
constexpr int refinement_factor = 8;

struct State {
  double value;
  double slope;
};

// psi'' = q psi on a region with offset U at trial decay rate kappa.
double curvature(double offset, double kappa, double h2m) noexcept {
  return 2.0 * offset / h2m + kappa * kappa;
}

Segment segment_from_state(State s, double q, double origin) noexcept {
  if (q > regime_tolerance) {
    const double r = std::sqrt(q);
    return {SegmentKind::exponential, r, origin, 0.5 * (s.value + s.slope / r),
            0.5 * (s.value - s.slope / r)};
  }
  if (q < -regime_tolerance) {
    const double k = std::sqrt(-q);
    return {SegmentKind::oscillatory, k, origin, s.value, s.slope / k};
  }
  return {SegmentKind::linear, 0.0, origin, s.value, s.slope};
}

// Transfer across a region of width w, dropping the positive factor e^{r w}
// in the exponential regime.
State transfer(State s, double q, double w) noexcept {
  if (q > regime_tolerance) {
    const double r = std::sqrt(q);
    const double e = std::exp(-2.0 * r * w);
    const double ch = 0.5 * (1.0 + e);
    const double sh = 0.5 * (1.0 - e);
    return {ch * s.value + sh / r * s.slope, r * sh * s.value + ch * s.slope};
  }
  if (q < -regime_tolerance) {
    const double k = std::sqrt(-q);
    const double c = std::cos(k * w);
    const double sn = std::sin(k * w);
    return {c * s.value + sn / k * s.slope, -k * sn * s.value + c * s.slope};
  }
  return {s.value + w * s.slope, s.slope};
}

void renormalize(State& s) noexcept {
  const double m = std::max(std::abs(s.value), std::abs(s.slope));
  if (m > 0.0) {
    s.value /= m;
    s.slope /= m;
  }
}

// Zeros of the left-decaying solution on the whole line. By the oscillation
// theorem this is the number of bound states below -hbar^2 kappa^2 / 2m.
int node_count(const DeltaPotentialProblem& problem, double kappa) {
  const auto& z = problem.positions();
  const auto& g = problem.strengths();
  const auto& U = problem.region_offsets();
  const double h2m = problem.units().hbar2_over_m();
  const std::size_t M = z.size();
  auto crosses = [](double a, double b) { return (a > 0.0 && b <= 0.0) || (a < 0.0 && b >= 0.0); };

  int nodes = 0;
  State s{1.0, kappa};
  for (std::size_t i = 0; i < M; ++i) {
    s.slope += 2.0 * g[i] / h2m * s.value;
    if (i + 1 == M) break;
    const double q = curvature(U[i + 1], kappa, h2m);
    const double w = z[i + 1] - z[i];
    const State next = transfer(s, q, w);
    if (q < -regime_tolerance) {
      // psi = R sin(k t + phi); zeros at k t + phi = m pi, t in (0, w]
      const double k = std::sqrt(-q);
      const double phi = std::atan2(s.value, s.slope / k);
      nodes += static_cast<int>(std::floor((phi + k * w) / M_PI) - std::floor(phi / M_PI));
    } else if (crosses(s.value, next.value)) {
      ++nodes;
    }
    s = next;
    renormalize(s);
  }
  // right tail: grow e^{kappa t} + decay e^{-kappa t} vanishes once if the
  // growing part has the opposite sign to psi at the last site
  const double grow = 0.5 * (s.value + s.slope / kappa);
  if (s.value * grow < 0.0) ++nodes;
  return nodes;
}

BoundState make_state(const DeltaPotentialProblem& problem, double kappa) {
  BoundState st;
  st.kappa = kappa;
  const double h2m = problem.units().hbar2_over_m();
  st.energy = -0.5 * h2m * kappa * kappa;
  st.root_residual = std::abs(matching_function(problem, kappa));
  st.wavefunction = propagate_wavefunction(problem, kappa);
  st.wavefunction.normalize();
  const ResidualReport r =
      verify_schrodinger_residual(problem, st.wavefunction, st.energy);
  st.cusp_residual = r.cusp;
  st.continuity_residual = r.continuity;
  return st;
}

} // namespace

double default_kappa_max(const DeltaPotentialProblem& problem) {
  const double h2m = problem.units().hbar2_over_m();
  double g_max = 0.0;
  for (double g : problem.strengths()) g_max = std::max(g_max, std::abs(g));
  double u_max = 0.0;
  for (double u : problem.region_offsets()) u_max = std::max(u_max, std::abs(u));
  const double scale = std::max(2.0 * g_max / h2m, std::sqrt(2.0 * u_max / h2m));
  return scale > 0.0 ? 4.0 * scale : 1.0;
}

double matching_function(const DeltaPotentialProblem& problem, double kappa) {
  const auto& z = problem.positions();
  const auto& g = problem.strengths();
  const auto& U = problem.region_offsets();
  const double h2m = problem.units().hbar2_over_m();
  const std::size_t M = z.size();

  State s{1.0, kappa};
  for (std::size_t i = 0; i < M; ++i) {
    s.slope += 2.0 * g[i] / h2m * s.value;
    if (i + 1 < M) {
      s = transfer(s, curvature(U[i + 1], kappa, h2m), z[i + 1] - z[i]);
      renormalize(s);
    }
  }
  const double grow = 0.5 * (s.value + s.slope / kappa);
  const double decay = 0.5 * (s.value - s.slope / kappa);
  const double norm = std::abs(grow) + std::abs(decay);
  return norm > 0.0 ? grow / norm : 0.0;
}

PiecewiseExpWavefunction propagate_wavefunction(const DeltaPotentialProblem& problem,
                                                double kappa) {
  const auto& z = problem.positions();
  const auto& g = problem.strengths();
  const auto& U = problem.region_offsets();
  const double h2m = problem.units().hbar2_over_m();
  const std::size_t M = z.size();

  std::vector<Segment> segments;
  segments.reserve(M + 1);
  segments.push_back({SegmentKind::exponential, kappa, z.front(), 1.0, 0.0});

  State s{1.0, kappa};
  for (std::size_t i = 0; i < M; ++i) {
    s.slope += 2.0 * g[i] / h2m * s.value;
    if (i + 1 == M) break;
    const Segment seg = segment_from_state(s, curvature(U[i + 1], kappa, h2m), z[i]);
    segments.push_back(seg);
    s = {seg.value(z[i + 1]), seg.derivative(z[i + 1])};
    const double m = std::max(std::abs(s.value), std::abs(s.slope));
    if (m > 1e150) {
      for (Segment& prev : segments) {
        prev.c1 /= m;
        prev.c2 /= m;
      }
      s.value /= m;
      s.slope /= m;
    }
  }
  segments.push_back({SegmentKind::exponential, kappa, z.back(), 0.0, s.value});
  return PiecewiseExpWavefunction(z, std::move(segments));
}

BoundStateList find_bound_states(const DeltaPotentialProblem& problem,
                                 const ScanOptions& options) {
  if (options.scan_points < 64) {
    throw std::invalid_argument("scan_points must be >= 64");
  }
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be > 0");

  BoundStateList out;
  out.kappa_max = options.kappa_max > 0.0 ? options.kappa_max : default_kappa_max(problem);
  out.scan_points = options.scan_points;

  const int n = options.scan_points;
  const double step = out.kappa_max / n;
  auto kappa_at = [&](int i) { return out.kappa_max * i / n; };

  std::vector<double> coarse(static_cast<std::size_t>(n) + 1);
  std::vector<int> nodes(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    coarse[i] = matching_function(problem, kappa_at(i));
    nodes[i] = node_count(problem, kappa_at(i));
  }

  auto changes = [](double lhs, double rhs) { return (lhs < 0.0) != (rhs < 0.0); };
  const double tol = options.tol;
  auto f = [&](double k) { return matching_function(problem, k); };

  // Splits (lo, hi] until every piece holds one state by node count.
  auto resolve = [&](auto&& self, double lo, double hi, double f_lo, double f_hi, int n_lo,
                     int n_hi) -> void {
    const int inside = n_lo - n_hi;
    if (inside <= 0) return;
    if ((inside == 1 && changes(f_lo, f_hi)) || hi - lo < tol) {
      for (int r = 0; r < inside; ++r) out.brackets.emplace_back(lo, hi);
      return;
    }
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    const int n_mid = node_count(problem, mid);
    self(self, lo, mid, f_lo, f_mid, n_lo, n_mid);
    self(self, mid, hi, f_mid, f_hi, n_mid, n_hi);
  };

  // Each coarse cell is resampled; a cell holding two roots shows no coarse
  // sign change but two fine ones. Cells where the fine pass still disagrees
  // with the node count fall back to count bisection.
  for (int i = 1; i < n; ++i) {
    const bool coarse_change = changes(coarse[i], coarse[i + 1]);
    const int expected = nodes[i] - nodes[i + 1];
    std::vector<std::pair<double, double>> cell;
    double prev_k = kappa_at(i);
    double prev_f = coarse[i];
    for (int j = 1; j <= refinement_factor; ++j) {
      const double k = (j == refinement_factor) ? kappa_at(i + 1)
                                                : kappa_at(i) + step * j / refinement_factor;
      const double fk = (j == refinement_factor) ? coarse[i + 1] : f(k);
      if (changes(prev_f, fk)) cell.emplace_back(prev_k, k);
      prev_k = k;
      prev_f = fk;
    }
    const int found = static_cast<int>(cell.size());
    if (found != (coarse_change ? 1 : 0) || found != expected) out.scan_too_coarse = true;
    if (found == expected) {
      out.brackets.insert(out.brackets.end(), cell.begin(), cell.end());
    } else {
      resolve(resolve, kappa_at(i), kappa_at(i + 1), coarse[i], coarse[i + 1], nodes[i],
              nodes[i + 1]);
    }
  }

  for (const auto& [lo, hi] : out.brackets) {
    double k = 0.5 * (lo + hi);
    if (changes(f(lo), f(hi))) {
      auto done = [tol](double a, double b) { return std::abs(b - a) < tol; };
      const auto root = boost::math::tools::bisect(f, lo, hi, done);
      k = 0.5 * (root.first + root.second);
    }
    out.states.push_back(make_state(problem, k));
  }
  std::sort(out.states.begin(), out.states.end(),
            [](const BoundState& l, const BoundState& r) { return l.energy < r.energy; });
  return out;
}

BoundState ground_state(const DeltaPotentialProblem& problem, const ScanOptions& options) {
  BoundStateList list = find_bound_states(problem, options);
  if (list.states.empty()) throw NoBoundStates("potential has no bound states");
  return std::move(list.states.front());
}

double expectation_potential_numeric(const PiecewiseExpWavefunction& psi,
                                     const DeltaPotentialProblem& problem) {
  const auto& sites = problem.positions();
  const auto& bp = psi.breakpoints();
  if (sites.size() != bp.size() || !std::equal(sites.begin(), sites.end(), bp.begin())) {
    throw BreakpointMismatch("wavefunction and potential disagree on site positions");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const double v = psi.value_right(i);
    total += problem.strengths()[i] * v * v;
  }
  const auto& U = problem.region_offsets();
  for (std::size_t k = 0; k < U.size(); ++k) {
    if (U[k] != 0.0) total += U[k] * psi.region_norm_squared(k);
  }
  return total;
}

double expectation_kinetic_numeric(const PiecewiseExpWavefunction& psi,
                                   const UnitSystem& units) {
  return 0.5 * units.hbar2_over_m() * derivative_norm_squared(psi);
}

} // namespace sheetcrystal
