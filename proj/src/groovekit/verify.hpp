#pragma once

#include <string>
#include <vector>

namespace groovekit {

struct verify_check {
  std::string name;
  std::string detail; // what was measured and how the bound is read
  double measured = 0;
  double tolerance = 0;
  bool passed = false;
};

struct verify_report {
  std::string suite;
  bool all_passed = false;
  double elapsed_seconds = 0;
  std::vector<verify_check> checks;
};

// Runs the named invariant suite: "identities" (algebraic structure of the
// similarity basis), "routes" (series vs inverse-Laplace vs Fourier-cosine
// cross-validation), "asymptotics" (far-field decay/growth and initial
// planarity), or "all". Checks execute concurrently up to thread_budget().
// Throws errc::invalid_argument for an unknown suite name; individual check
// failures are reported, never thrown.
verify_report run_verify(const std::string& suite);

// Schema-versioned rendering ("groovekit-verify/1").
std::string verify_report_json(const verify_report& report);

} // namespace groovekit
