#pragma once

#include <string>
#include <vector>

namespace kmlat {

struct SelfTestResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Quick differential checks: root recurrences, sign calculus, unipotent
/// group laws, engine against the affine matrix oracle, star actions,
/// covolume arithmetic, center orders, admissibility and the sum-of-roots
/// witness.
std::vector<SelfTestResult> run_selftest();

} // namespace kmlat
