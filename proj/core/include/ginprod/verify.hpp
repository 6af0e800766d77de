#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ginprod::verify {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string obtained;
  std::string tolerance;  // "exact" or a numeric description
  bool pass = false;
};

struct VerifyOptions {
  bool full = false;          // include the stochastic criteria
  bool desk_scale = false;    // N=200 / 500-sample presets instead of N=500 / 1500
  std::uint64_t seed = 0;
  int threads = 0;
  std::string artifacts_dir;  // optional CSV dumps for the stochastic checks
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int passed = 0;
  int failed = 0;
  bool all_pass() const { return failed == 0; }
};

inline constexpr int kNumCriteria = 11;
inline constexpr int kNumQuickCriteria = 6;  // 1..6 are symbolic/exact

/// True when criterion k needs sampling (7..10); 11 is the quick-suite meta
/// check and is grouped with the exact ones.
bool criterion_is_stochastic(int k);

/// Run one numbered criterion; returns its (possibly several) checks.
std::vector<CheckResult> run_criterion(int k, const VerifyOptions& opts);

/// Run criteria 1..6 (quick) or 1..11 (full).
VerifyReport run_all(const VerifyOptions& opts);

std::string report_json(const VerifyReport& rep, const VerifyOptions& opts, int indent = 2);

}  // namespace ginprod::verify
