#pragma once

#include <string>
#include <vector>

// Self-check suites behind the `verify` CLI command: structural invariants
// (coordinate bijection, shift involution), numerical invariants (unitarity,
// norm drift), the stationary-state and action identities, and the dense
// oracle cross-check.

namespace hn4walk {

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
  // Test fixture: corrupts one shift-permutation entry before the involution
  // suite runs, which must surface as a failure.
  bool inject_shift_fault = false;
};

struct SuiteResult {
  std::string suite;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<SuiteResult> run_verification(VerifyLevel level,
                                          const VerifyOptions& opts = {});

}  // namespace hn4walk
