// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <sheetcrystal/verification.hpp>

#include <fmt/core.h>

#include <string>

using namespace sheetcrystal;

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  const VerificationReport report = run_verification(Depth::full);

  if (verbose) fmt::print("{}\n", format_report(report));

  bool ok = true;
  for (const CriterionSummary& s : report.summarize()) {
    const std::string id = s.criterion == 0 ? " S" : fmt::format("{:2}", s.criterion);
    std::string line = fmt::format("{} criterion {}: {} ({} checks, worst residual/tolerance {:.3g})",
                                   s.passed() ? "PASS" : "FAIL", id, s.title, s.checks,
                                   s.worst_ratio);
    if (!s.passed())
      line += fmt::format(" [{} failing, first: {}]", s.failures, s.first_failure);
    fmt::print("{}\n", line);
    if (s.criterion != 0) ok = ok && s.passed();
  }

  fmt::print("\nbound states at alpha a = 1 (published claim: exactly one)\n");
  for (const CountRow& r : report.bound_state_counts)
    fmt::print("  N={} count={} lowest={:.15g} deterministic={}\n", r.N, r.count, r.ground_energy,
               r.deterministic ? "yes" : "no");

  fmt::print("\n{}\n", ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return ok ? 0 : 1;
}
