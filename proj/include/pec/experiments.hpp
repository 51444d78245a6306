#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pec/coloring.hpp"
#include "pec/graph.hpp"

namespace pec {

// One checked case of an experiment: what was computed, what it was compared
// against, and where the expected value comes from (closed formula,
// independent oracle, construction, or a fixed small case).
struct ExperimentReport {
  std::string experiment;
  std::string input;
  std::string expected;
  std::string actual;
  std::string source;
  bool pass = false;
  double seconds = 0.0;
};

// Experiment ids in suite order.
const std::vector<std::string>& experiment_ids();

// Runs one experiment; throws std::invalid_argument for unknown ids.
std::vector<ExperimentReport> run_experiment(const std::string& id,
                                             std::uint64_t seed = 0);

std::vector<ExperimentReport> run_all_experiments(std::uint64_t seed = 0);

// Seeded instance generators shared by the experiment runner and the tests.
Graph random_connected_graph(std::mt19937_64& rng, int max_n,
                             double extra_edge_prob = 0.2);
EdgeColoring random_coloring(std::mt19937_64& rng, int edge_count, int max_colors);
Labeling random_injective_labeling(std::mt19937_64& rng, int n, int width);

}  // namespace pec
