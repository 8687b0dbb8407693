#include <doctest.h>

#include <sheetcrystal/closed_form.hpp>
#include <sheetcrystal/errors.hpp>
#include <sheetcrystal/oracle.hpp>

#include <cmath>

using namespace sheetcrystal;

namespace {

const UnitSystem atomic = UnitSystem::atomic();

CrystalParams crystal(int N, double alpha = 1.0, double a = 1.0) {
  return CrystalParams{N, alpha, a, atomic};
}

double sup_diff(const BoundState& s, const CrystalParams& p) {
  const double half = (p.N + 3) * p.a;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double z = -half + 2 * half * i / 199.0;
    worst = std::max(worst, std::abs(s.wavefunction.value(z) - psi_exact(p, z)));
  }
  return worst;
}

} // namespace

TEST_CASE("single delta") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const DeltaPotentialProblem p({0.0}, {-alpha}, atomic);
    const auto list = find_bound_states(p);
    REQUIRE(list.count() == 1);
    CHECK(std::abs(list.states[0].energy + alpha * alpha / 2) < 1e-10);
    CHECK(list.states[0].kappa == doctest::Approx(alpha).epsilon(1e-12));
    CHECK_FALSE(list.scan_too_coarse);
  }
  const auto gs = ground_state(DeltaPotentialProblem({0.0}, {-1.0}, atomic));
  CHECK(gs.wavefunction.value(0.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(expectation_potential_numeric(gs.wavefunction,
                                      DeltaPotentialProblem({0.0}, {-1.0}, atomic)) ==
        doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(expectation_kinetic_numeric(gs.wavefunction, atomic) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("two-sheet dual problem") {
  const DeltaPotentialProblem p({-1.0, 1.0}, {-1.0, -1.0}, {0.0, -2.0, 0.0}, atomic);
  const auto gs = ground_state(p);
  CHECK(std::abs(gs.energy + 2.0) < 1e-8);
  CHECK(std::abs(gs.wavefunction.derivative(0.3)) < 1e-6 * gs.wavefunction.value(0.3));
  CHECK(gs.wavefunction.value(-0.6) == doctest::Approx(gs.wavefunction.value(0.6)).epsilon(1e-7));
  const double u = expectation_potential_numeric(gs.wavefunction, p);
  const double t = expectation_kinetic_numeric(gs.wavefunction, atomic);
  CHECK(std::abs(u + t - gs.energy) < 1e-10);
  CHECK(gs.continuity_residual < 1e-12);
  CHECK(gs.cusp_residual < 1e-9);
}

TEST_CASE("crystal ground states match the closed form") {
  for (int N = 0; N <= 8; ++N) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      for (double a : {0.5, 1.0, 2.0}) {
        const auto p = crystal(N, alpha, a);
        const auto gs = ground_state(ionic_crystal_potential(p));
        CHECK(std::abs(gs.energy - ground_energy(p)) < 1e-9);
        CHECK(sup_diff(gs, p) < 1e-8);
        CHECK(gs.cusp_residual < 1e-9);
        CHECK(gs.continuity_residual < 1e-12);
      }
    }
  }
}

TEST_CASE("N=2 ground state and expectation values") {
  const auto p = crystal(2);
  const auto problem = ionic_crystal_potential(p);
  const auto gs = ground_state(problem);
  CHECK(std::abs(gs.energy + 0.5) < 1e-9);
  const double u = expectation_potential_numeric(gs.wavefunction, problem);
  const double t = expectation_kinetic_numeric(gs.wavefunction, atomic);
  CHECK(std::abs(u + t - gs.energy) < 1e-9);
  CHECK(std::abs(u - expectation_potential_exact(p)) < 1e-10);
  // the published value -2.729329 belongs to a wavefunction that is not normalized
  CHECK(std::abs(u - expectation_potential(p)) > 1.0);
}

TEST_CASE("every returned state satisfies the boundary conditions") {
  for (int N = 0; N <= 6; ++N) {
    const auto problem = ionic_crystal_potential(crystal(N));
    const auto list = find_bound_states(problem);
    CHECK(list.count() == static_cast<std::size_t>(N + 1));
    for (std::size_t i = 0; i < list.count(); ++i) {
      const auto& s = list.states[i];
      if (i > 0) CHECK(s.energy > list.states[i - 1].energy);
      CHECK(s.cusp_residual < 1e-9);
      CHECK(s.continuity_residual < 1e-12);
      CHECK(std::abs(norm_squared(s.wavefunction) - 1.0) < 1e-10);
      const double u = expectation_potential_numeric(s.wavefunction, problem);
      const double t = expectation_kinetic_numeric(s.wavefunction, atomic);
      CHECK(std::abs(u + t - s.energy) < 1e-9);
    }
  }
}

TEST_CASE("the scan is deterministic") {
  const auto problem = ionic_crystal_potential(crystal(5, 1.3, 0.8));
  const auto a = find_bound_states(problem);
  const auto b = find_bound_states(problem);
  REQUIRE(a.count() == b.count());
  for (std::size_t i = 0; i < a.count(); ++i) {
    CHECK(a.states[i].energy == b.states[i].energy);
    CHECK(a.states[i].wavefunction.value(0.4) == b.states[i].wavefunction.value(0.4));
  }
  CHECK(a.brackets == b.brackets);
}

TEST_CASE("matching function changes sign at the root") {
  const DeltaPotentialProblem p({0.0}, {-1.0}, atomic);
  CHECK(matching_function(p, 0.9) * matching_function(p, 1.1) < 0.0);
  CHECK(std::abs(matching_function(p, 1.0)) < 1e-12);
  CHECK(std::abs(matching_function(p, 0.3)) <= 1.0);
}

TEST_CASE("wide crystals do not overflow") {
  const auto p = crystal(40, 1.0, 20.0);
  const auto gs = ground_state(ionic_crystal_potential(p));
  CHECK(std::isfinite(gs.energy));
  CHECK(std::abs(gs.energy + 0.5) < 1e-9);
  CHECK(std::abs(norm_squared(gs.wavefunction) - 1.0) < 1e-10);
}

TEST_CASE("repulsive potentials bind nothing") {
  const DeltaPotentialProblem p({0.0}, {1.0}, atomic);
  CHECK(find_bound_states(p).count() == 0);
  CHECK_THROWS_AS(ground_state(p), NoBoundStates);
}

TEST_CASE("oracle options and site checks") {
  const DeltaPotentialProblem p({0.0}, {-1.0}, atomic);
  CHECK_THROWS(find_bound_states(p, ScanOptions{0.0, 10, 1e-13}));
  const auto list = find_bound_states(p, ScanOptions{5.0, 256, 1e-13});
  CHECK(list.kappa_max == 5.0);
  CHECK(list.scan_points == 256);
  CHECK(default_kappa_max(p) == doctest::Approx(8.0));
  const auto gs = ground_state(p);
  CHECK_THROWS_AS(expectation_potential_numeric(gs.wavefunction,
                                                DeltaPotentialProblem({1.0}, {-1.0}, atomic)),
                  BreakpointMismatch);
}

TEST_CASE("irregular quasicrystal spacing") {
  const DeltaPotentialProblem p({-1.7, -0.4, 0.9, 1.3, 3.0}, {-1.0, 0.6, -1.2, 0.5, -0.8}, atomic);
  const auto list = find_bound_states(p);
  REQUIRE(list.count() >= 1);
  for (const auto& s : list.states) {
    CHECK(s.cusp_residual < 1e-9);
    const double u = expectation_potential_numeric(s.wavefunction, p);
    const double t = expectation_kinetic_numeric(s.wavefunction, atomic);
    CHECK(std::abs(u + t - s.energy) < 1e-9);
  }
  // lowest state is nodeless
  for (double z = -6.0; z <= 8.0; z += 0.05) CHECK(list.states[0].wavefunction.value(z) > 0.0);
}
