#pragma once

#include <string>
#include <vector>

namespace qbank::validate {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Options {
  bool inject_u_sign_flip = false;  // mutation hook for self-testing the suite
  int quad_refine = 0;              // force a Simpson refinement (0 = automatic)
};

/// The full numeric validation suite: operator algebra, closed-form vs
/// brute-force equivalences, propagator cross-checks, quadrature convergence,
/// and every preset's expectation tags. Deterministic order.
std::vector<CheckResult> run_all(const Options& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qbank::validate
