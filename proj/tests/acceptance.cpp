// Acceptance run: one line per criterion, nonzero exit if any fails. All
// checks are exact equalities, so there are no tolerances beyond the
// runtime budget of criterion 1, which is pinned inside run_acceptance.
#include <algorithm>
#include <cstdlib>
#include <iostream>

#include "retract/selftest.hpp"

int main() {
  retract::SelftestOptions options;
  options.on_result = [](const retract::CriterionResult& r) { std::cout << retract::format_result(r) << std::endl; };
  auto results = retract::run_acceptance(options);
  std::size_t passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? EXIT_SUCCESS : EXIT_FAILURE;
}
