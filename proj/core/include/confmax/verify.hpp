#pragma once

#include <map>
#include <string>
#include <vector>

#include "confmax/types.hpp"

namespace confmax {

/// Knobs shared by the verification suites.
struct SuiteConfig {
  int k_max = 3;
  int samples = 25;
  std::uint64_t seed = 12345;
  int order = 0;  // 0 = suite default / adaptive
  std::map<std::string, double> tolerances;  // overrides by check name

  double tol(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;   // residual or measured value
  double threshold = 0.0;  // tolerance it was compared against
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_json() const;
};

/// Registered suite names: geometry, ktypes, maxwell, conformal, pairing,
/// lie-action, branching, planewave, all.
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace confmax
