#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leray/estimates.hpp"
#include "leray/solver.hpp"

namespace leray {

// Sweep parallelism cap: LERAY_THREADS when set, otherwise min(hw, 4).
int sweep_threads();

// Runs fn(i) for i in [0, count) on up to sweep_threads() workers; results
// are merged in index order, so output is deterministic.
void parallel_for_indexed(int count, const std::function<void(int)>& fn);

struct SuiteResult {
  std::vector<EstimateReport> reports;
  bool all_pass = true;
};

// Named verification suites behind the `verify` command. A config overrides
// the desk-scale defaults where it applies; tuples whose hypotheses are
// rejected become report rows with pass untouched (they do not fail the
// suite).
SuiteResult run_suite(const std::string& name, const std::optional<SolverConfig>& config);

std::vector<std::string> suite_names();

}  // namespace leray
