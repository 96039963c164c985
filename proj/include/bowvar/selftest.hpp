#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bowvar/engine.hpp"

namespace bowvar {

// Randomized cross-validation of the whole engine: every suite checks one
// structural identity (two independent computations of the same thing, or an
// involution) over a seeded corpus of diagrams.
struct SelftestOptions {
  std::uint64_t seed = 1;
  int diagrams = 40;  // corpus size
  int max_total = 8;  // cap on the number of branes (at least 2)
  bool include_surgery_oracle = true;
  ExecutionPolicy policy = ExecutionPolicy::Serial;
};

struct SuiteResult {
  std::string name;
  long long cases = 0;
  bool ok = true;
  std::string message;  // first failure, empty when ok
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  int diagrams_generated = 0;
  bool ok = true;
  long long total_cases = 0;
};

SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace bowvar
