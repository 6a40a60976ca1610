#pragma once

#include <string>
#include <vector>

#include "gwh/parallel.hpp"

namespace gwh {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  /// Labels of the first failing cases.
  std::vector<std::string> failures;
};

std::vector<std::string> suite_names();

/// Runs one cross-pipeline suite with degrees capped at max_degree (and by
/// the configured ceilings). Throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name, int max_degree, Execution ex = Execution::parallel);

}  // namespace gwh
