#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bbg::suite {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
};

// The fixture pool shared by the property checks: the static catalog plus a
// few generated cones, fans and complete graphs.
std::vector<std::string> fixture_pool();

CriterionResult trefoil_arrangement(const SuiteOptions& options);
CriterionResult extended_trefoil_arrangement(const SuiteOptions& options);
CriterionResult trefoil_iep_failure(const SuiteOptions& options);
CriterionResult recognition_verdicts(const SuiteOptions& options);
CriterionResult membership_cross_validation(const SuiteOptions& options);
CriterionResult spanner_crown_equivalence(const SuiteOptions& options);
CriterionResult arrangement_battery(const SuiteOptions& options);
CriterionResult oracle_equivalence(const SuiteOptions& options);
CriterionResult fibering(const SuiteOptions& options);
CriterionResult presentation_consistency(const SuiteOptions& options);

// Runs all ten in order; `on_result` sees each result as it completes.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace bbg::suite
