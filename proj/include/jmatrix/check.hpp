#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jmatrix/kinematics.hpp"

namespace jmatrix {

struct CheckOptions {
  /// Channels to sweep; empty runs the built-in defaults
  /// (kappa in {1,2,3}, both bases, lambda = 1, alpha = 1, Balance C).
  std::vector<ChannelConfig> channels;
  unsigned seed = 20240901;
  /// Fault-injection hook: added to every Omega off-diagonal entry inside
  /// the recursion-residual suite. Nonzero values must make that suite fail.
  double omega_offdiag_perturbation = 0.0;
};

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;  // worst observed value vs bound
};

/// Invariant suites: special-function oracles, quadrature overlaps,
/// recursion residuals, unitarity + nesting, N-independence.
std::vector<CheckOutcome> run_check(const CheckOptions& opt);

/// Print a pass/fail table; return 0 if all pass, 3 otherwise.
int run_check_report(const CheckOptions& opt, std::ostream& out);

/// Re-ingest an emit-table JSON document: recompute the table from the
/// embedded channel config and verify the stored arrays and their
/// recursion residuals reproduce identically. Returns 0/3.
int run_check_from_table(const std::string& json_text, std::ostream& out);

}  // namespace jmatrix
