#include "sheetcrystal/closed_form.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sheetcrystal/errors.hpp"

namespace sheetcrystal {

namespace {

constexpr double sign_of_power(int k) noexcept { return (k % 2 == 0) ? 1.0 : -1.0; }

// (1 - (-1)^N) / 2: one for odd N, zero for even N.
constexpr double odd_indicator(int N) noexcept { return (N % 2 == 0) ? 0.0 : 1.0; }

// 2 e^{-x} sinh x, stable for all x >= 0.
double two_exp_sinh(double x) noexcept { return -std::expm1(-2.0 * x); }

} // namespace

void CrystalParams::validate() const {
  if (N < 0) throw std::invalid_argument("crystal N must be >= 0");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("crystal alpha must be finite and > 0");
  }
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("crystal spacing a must be finite and > 0");
  }
}

double CrystalParams::kappa() const noexcept { return alpha / units.hbar2_over_m(); }

DeltaPotentialProblem ionic_crystal_potential(const CrystalParams& p) {
  p.validate();
  std::vector<double> positions;
  std::vector<double> strengths;
  for (int n = -p.N; n <= p.N; ++n) {
    positions.push_back(n * p.a);
    strengths.push_back(-p.alpha * sign_of_power(n + p.N));
  }
  return DeltaPotentialProblem(std::move(positions), std::move(strengths), p.units);
}

double ground_energy(const CrystalParams& p) {
  p.validate();
  return -p.alpha * p.alpha / (2.0 * p.units.hbar2_over_m());
}

double log_normalization_constant(const CrystalParams& p) {
  p.validate();
  const double kappa = p.kappa();
  if (p.N == 0) return 0.5 * std::log(kappa);
  const double x = kappa * p.a;
  return 0.5 * std::log(kappa) + kappa * p.N * p.a -
         0.5 * std::log1p(odd_indicator(p.N) * two_exp_sinh(x));
}

double normalization_constant(const CrystalParams& p) {
  p.validate();
  if (p.N == 0) return std::sqrt(p.units.mass() * p.alpha) / p.units.hbar();
  return std::exp(log_normalization_constant(p));
}

double log_normalization_constant_exact(const CrystalParams& p) {
  p.validate();
  const double kappa = p.kappa();
  const double x = kappa * p.a;
  return 0.5 * std::log(kappa) + kappa * p.N * p.a -
         0.5 * std::log1p(p.N * two_exp_sinh(x));
}

double normalization_constant_exact(const CrystalParams& p) {
  p.validate();
  if (p.N == 0) return std::sqrt(p.units.mass() * p.alpha) / p.units.hbar();
  return std::exp(log_normalization_constant_exact(p));
}

double psi_exponent(const CrystalParams& p, double z) {
  p.validate();
  double sum = 0.0;
  for (int n = -p.N; n <= p.N; ++n) {
    sum += sign_of_power(n + p.N) * std::abs(z - n * p.a);
  }
  return -p.kappa() * sum;
}

double psi(const CrystalParams& p, double z) {
  return std::exp(log_normalization_constant(p) + psi_exponent(p, z));
}

double psi_exact(const CrystalParams& p, double z) {
  return std::exp(log_normalization_constant_exact(p) + psi_exponent(p, z));
}

double potential_ratio(const CrystalParams& p) {
  p.validate();
  if (p.N == 0) return 1.0;
  const double t = two_exp_sinh(p.kappa() * p.a);
  return (1.0 + p.N * t) / (1.0 + odd_indicator(p.N) * t);
}

double expectation_potential(const CrystalParams& p) {
  const double scale = p.alpha * p.alpha / p.units.hbar2_over_m();
  if (p.N == 0) {
    p.validate();
    return -scale;
  }
  return -scale * potential_ratio(p);
}

double expectation_kinetic(const CrystalParams& p) {
  const double scale = p.alpha * p.alpha / p.units.hbar2_over_m();
  if (p.N == 0) {
    p.validate();
    return 0.5 * scale;
  }
  return -scale * (0.5 - potential_ratio(p));
}

double expectation_potential_exact(const CrystalParams& p) {
  p.validate();
  return -p.alpha * p.alpha / p.units.hbar2_over_m();
}

double expectation_kinetic_exact(const CrystalParams& p) {
  p.validate();
  return 0.5 * p.alpha * p.alpha / p.units.hbar2_over_m();
}

IdentitySides identity_abs_sum(int n, int N) {
  if (N < 0 || n < -N || n > N) {
    throw IndexOutOfRange("identity_abs_sum needs |n| <= N (n = " + std::to_string(n) +
                          ", N = " + std::to_string(N) + ")");
  }
  long long lhs = 0;
  for (int j = -N; j <= N; ++j) {
    const long long term = std::abs(n - j);
    lhs += ((j + N) % 2 == 0) ? term : -term;
  }
  const double rhs = 0.5 * ((1.0 + 2.0 * N) - sign_of_power(n + N));
  return {static_cast<double>(lhs), rhs};
}

IdentitySides identity_alternating_exp(int N, double x) {
  if (N < 0) throw std::invalid_argument("identity_alternating_exp needs N >= 0");
  double lhs = 0.0;
  for (int n = 0; n <= 2 * N; ++n) {
    const double s = sign_of_power(n);
    lhs += s * std::exp(x * s);
  }
  return {lhs, std::exp(x) + 2.0 * N * std::sinh(x)};
}

IdentitySides identity_sinh_parity(int N, double x) {
  if (N < 1) throw std::invalid_argument("identity_sinh_parity needs N >= 1");
  double sum = 0.0;
  for (int k = 0; k < N; ++k) sum += std::sinh(sign_of_power(k + N) * x);
  return {sign_of_power(N) * sum, odd_indicator(N) * std::sinh(x)};
}

double segment_integral_closed(int N, double s, double a) {
  if (N < 1) throw std::invalid_argument("segment_integral_closed needs N >= 1");
  if (a == 0.0) return 0.0;
  double sum = 0.0;
  for (int k = 0; k < N; ++k) sum += std::sinh(s * a * sign_of_power(k) / 2.0);
  return (2.0 / s) * std::exp(-s * a * sign_of_power(N) * (1.0 + 2.0 * N) / 2.0) * sum;
}

double segment_integral_exact(int N, double s, double a) {
  if (N < 1) throw std::invalid_argument("segment_integral_exact needs N >= 1");
  if (a == 0.0) return 0.0;
  return (2.0 * N / s) * std::exp(-s * a * sign_of_power(N) * (1.0 + 2.0 * N) / 2.0) *
         std::sinh(s * a / 2.0);
}

double segment_exponent(int N, double s, double a, double z) {
  double sum = 0.0;
  for (int n = 0; n <= N; ++n) sum += sign_of_power(n) * std::abs(z + n * a);
  for (int n = 1; n <= N; ++n) sum += sign_of_power(n) * std::abs(z - n * a);
  return -s * sum;
}

} // namespace sheetcrystal
