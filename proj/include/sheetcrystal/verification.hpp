#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sheetcrystal/closed_form.hpp"

namespace sheetcrystal {

enum class Depth { quick, full };

/// The closed forms under test. Swapping one out lets a test confirm that a
/// broken formula is caught and named.
struct ClosedFormSubject {
  std::function<double(const CrystalParams&)> ground_energy;
  std::function<double(const CrystalParams&)> normalization_constant;
  std::function<double(const CrystalParams&, double)> psi;
  std::function<double(const CrystalParams&)> expectation_potential;
  std::function<double(const CrystalParams&)> expectation_kinetic;
  std::function<double(int, double, double)> segment_integral_closed;
};

ClosedFormSubject published_closed_forms();
ClosedFormSubject exact_closed_forms();

struct CheckResult {
  int criterion = 0; ///< 1..10; 0 for supplementary checks
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct CountRow {
  int N = 0;
  std::size_t count = 0;
  double ground_energy = 0.0;
  bool deterministic = false;
};

struct CriterionSummary {
  int criterion = 0;
  std::string title;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst_ratio = 0.0; ///< max measured / tolerance
  std::string first_failure;
  bool passed() const noexcept { return failures == 0; }
};

struct VerificationReport {
  Depth depth = Depth::quick;
  std::vector<CheckResult> checks;
  std::vector<CountRow> bound_state_counts;

  bool all_passed() const noexcept;
  std::vector<CriterionSummary> summarize() const;
};

/// Runs the acceptance checks. Quick: crystals up to N = 4 and identities up
/// to N = 4. Full: crystals up to N = 8 and identities up to N = 20.
/// Supplementary checks run the exact closed forms through the same oracles.
VerificationReport run_verification(Depth depth,
                                    const ClosedFormSubject& subject = published_closed_forms());

/// Pass/fail table, criterion summary, and the bound-state count table.
std::string format_report(const VerificationReport& report);

std::string criterion_title(int criterion);

} // namespace sheetcrystal
