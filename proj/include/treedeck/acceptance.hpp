#pragma once

// The acceptance suite: one self-checking report per criterion. Shared by
// the acceptance test binary and `treedeck verify-all`.

#include <string>
#include <vector>

#include "treedeck/limits.hpp"

namespace treedeck {

enum class SuiteLevel { quick, full };

struct SuiteOptions {
  /// quick runs each criterion at its stated range; full widens the ranges.
  SuiteLevel level = SuiteLevel::quick;
  Parallelism parallelism;
  /// Thread count of the second pass in the determinism criterion.
  unsigned alternate_threads = 4;
  /// Criteria to run (1..13); empty runs all.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  /// Deterministic record lines; timings never appear here.
  std::string body;
};

std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

/// "PASS  3  oracle equivalence  (0.81 s)"
std::string summary_line(const CriterionResult& r);

}  // namespace treedeck
