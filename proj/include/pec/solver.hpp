#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "pec/coloring.hpp"
#include "pec/graph.hpp"

namespace pec {

struct SolveBudget {
  std::chrono::milliseconds wall{120'000};
};

// Result of an exact solve. When the wall budget interrupts the search the
// status is an interval [lower, upper] with upper witnessed; node ordering is
// deterministic, so completed runs always return the same value.
struct PhatResult {
  bool exact = false;
  int value = -1;  // meaningful when exact
  int lower = 0;
  int upper = 0;
  std::optional<Labeling> witness;  // canonical labeling achieving upper
};

// Exact spec number: minimum colors over canonical edge-colorings, searched
// by assigning labels in BFS order within F2^c for increasing targets c.
// Symmetry is broken by requiring each newly independent label to be the
// next standard atom, which is a pure change of basis of the label space and
// preserves color counts.
PhatResult exact_phat(const Graph& g, const SolveBudget& budget = {});

struct PResult {
  bool exact = false;
  int value = -1;
  int lower = 0;
  int upper = 0;
  std::optional<EdgeColoring> witness;  // pec achieving upper
};

// Exact pec number by branch and bound over edge colorings in a
// connectivity-preserving edge order, with canonical color numbering (a new
// id is opened only after all smaller ids were tried) and incremental
// feasibility limited to simple paths through the most recently colored edge.
PResult exact_p(const Graph& g, const SolveBudget& budget = {});

struct HypercubeEmbedding {
  int dimension = 0;                  // k = ceil(lg n)
  std::vector<std::uint64_t> coords;  // vertex -> k-bit tuple (bit b = coord b+1)
};

// Injective adjacency-preserving map into Q_{ceil(lg n)}, which exists iff
// the spec number equals ceil(lg n). Extracted from an optimal canonical
// labeling by a change of basis that sends the (necessarily independent)
// colors to standard atoms; the result is verified edge by edge.
std::optional<HypercubeEmbedding> hypercube_embedding(const Graph& g,
                                                      const SolveBudget& budget = {});

// Havel-Moravek certificate: phi is a pec and every cycle image is zero
// (dim C_phi = 0). With at most k colors this certifies the graph embeds
// in Q_k.
bool havel_moravek_check(const Graph& g, const EdgeColoring& phi,
                         const PecBudget& pec_budget = {});

}  // namespace pec
