#pragma once

// Acceptance suite: one result per primary criterion, shared by the
// `selftest` subcommand and the acceptance test binary.

#include <string>
#include <vector>

namespace arrowgraph {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

std::vector<CriterionResult> run_acceptance_suite();

/// "PASS  name  (0.012 s / 1 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace arrowgraph
