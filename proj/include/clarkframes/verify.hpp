#pragma once

#include <string>

#include "clarkframes/frames.hpp"

namespace clarkframes {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string detail;  // parameters or skip reason, human-readable
};

struct VerifyOptions {
  int terms = 64;               // recursion / frame depth for measure checks
  double boundary_tol = 1e-6;   // radial-limit convergence tolerance
  double grid_radius = 0.9;
  int grid_count = 100;
  // Atomization depth for self-similar carriers. Deeper carriers sharpen the
  // radial-limit error constants by 1/min-weight, and the pinned r = 1-2^-20
  // ladder stops certifying convergence past ~2^7 atoms, so the default stays
  // comfortably inside that envelope.
  int carrier_depth = 6;
  // Reference inner function for the membership residual; when absent the
  // measure's own inner function is used.
  std::optional<BlaschkeProduct> reference_phi;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed = false;  // skips do not count against the verdict
};

// Runs the identity suite against one measure: the Toeplitz recursion
// residual, the dual-sequence/frame-polynomial agreement, the Parseval
// deviation, the Poisson representation of the inner function, radial
// boundary limits, the normalized-Cauchy expansion, the kernel double
// series, the membership residual, and the spectral-measure composition
// check.  Checks whose hypotheses the measure fails to satisfy (a density
// measure is not singular) are reported as skipped.
VerificationReport run_verification(const Measure& mu, const VerifyOptions& opt);

}  // namespace clarkframes
