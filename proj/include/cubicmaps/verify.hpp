#pragma once

// Self-check suite run by `cubicmaps verify`.

#include <string>
#include <vector>

namespace cubicmaps {

struct VerifyConfig {
  long max_n = 30;         // table rows for the exact cross-checks
  long lemma_n = 1000;     // Lemma 1 sweep length
  double lemma_step = 0.05;
  long census_edges = 4;
  unsigned workers = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyConfig& config);

}  // namespace cubicmaps
