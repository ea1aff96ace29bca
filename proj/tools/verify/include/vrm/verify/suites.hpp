#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vrm::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  long trials = 0;
  long failures = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  long iters = 1000;
  // Replaces every numeric tolerance when set.
  std::optional<double> tol;
};

const std::vector<std::string>& suite_names();
// name is one of suite_names() or "all".
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts);
std::string summary_table(const std::vector<CheckResult>& results);
long total_failures(const std::vector<CheckResult>& results);

}  // namespace vrm::verify
