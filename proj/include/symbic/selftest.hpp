#pragma once

// The acceptance suite, shared by the CLI and the test driver.

#include <cstdint>
#include <string>
#include <vector>

namespace symbic {

struct SelftestOptions {
  bool long_running = false;  // adds the n = 5 shelling check
  std::uint64_t seed = 0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0;
};

inline constexpr int kCriteria = 8;

CriterionResult run_criterion(int id, const SelftestOptions& options);

/// "[PASS] 3 round trips (1.2 s)".
std::string summary_line(const CriterionResult& r);

}  // namespace symbic
