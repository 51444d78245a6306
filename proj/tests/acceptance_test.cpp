// Acceptance suite: runs every experiment and prints one line per criterion.
// Exits nonzero if any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "pec/experiments.hpp"

int main() {
  const std::vector<std::string>& ids = pec::experiment_ids();
  int failed_criteria = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::vector<pec::ExperimentReport> rows;
    try {
      rows = pec::run_experiment(ids[i], 0);
    } catch (const std::exception& e) {
      std::printf("criterion %2zu %-20s FAIL (exception: %s)\n", i + 1,
                  ids[i].c_str(), e.what());
      ++failed_criteria;
      continue;
    }
    int passed = 0;
    double seconds = 0.0;
    for (const auto& r : rows) {
      passed += r.pass;
      seconds += r.seconds;
    }
    const bool ok = passed == static_cast<int>(rows.size());
    std::printf("criterion %2zu %-20s %s %3d/%-3zu cases %8.2fs\n", i + 1,
                ids[i].c_str(), ok ? "PASS" : "FAIL", passed, rows.size(),
                seconds);
    if (!ok) {
      ++failed_criteria;
      for (const auto& r : rows) {
        if (!r.pass)
          std::printf("    FAIL %s: %s | expected %s | got %s (%s)\n",
                      r.experiment.c_str(), r.input.c_str(), r.expected.c_str(),
                      r.actual.c_str(), r.source.c_str());
      }
    }
  }
  if (failed_criteria == 0) {
    std::printf("ACCEPTANCE: all %zu criteria passed\n", ids.size());
    return 0;
  }
  std::printf("ACCEPTANCE: %d of %zu criteria FAILED\n", failed_criteria,
              ids.size());
  return 1;
}
