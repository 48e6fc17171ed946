#pragma once

#include <functional>
#include <string>
#include <vector>

namespace retract {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct SelftestOptions {
  int threads = 0;
  /// Called after each criterion completes.
  std::function<void(const CriterionResult&)> on_result;
};

/// Runs every acceptance criterion; one result per criterion.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& options = {});

/// "[PASS] 1 laurent-retracts: ..." line for a result.
std::string format_result(const CriterionResult& r);

}  // namespace retract
