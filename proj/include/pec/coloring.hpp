#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pec/gf2.hpp"
#include "pec/graph.hpp"

namespace pec {

// Edge coloring keyed by edge id. Construction renumbers color ids by first
// appearance in edge-id order, so ids always form the contiguous range
// 1..num_colors and two colorings compare equal iff they induce the same
// partition of the edges in the same order.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(const std::vector<int>& colors_by_edge);

  int size() const { return static_cast<int>(colors_.size()); }
  int color(int edge_id) const { return colors_.at(edge_id); }
  int num_colors() const { return num_colors_; }
  const std::vector<int>& colors() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<int> colors_;
  int num_colors_ = 0;
};

// Injective vertex labeling into a binary vector space; generates the
// canonical edge-coloring phi(uv) = labels[u] + labels[v].
struct Labeling {
  std::vector<Gf2Vector> labels;
  bool injective() const;
};

// Walk given as its vertex sequence; consecutive vertices must be adjacent.
struct WalkWitness {
  std::vector<int> vertices;
  bool open() const {
    return vertices.size() >= 2 && vertices.front() != vertices.back();
  }
};

// True iff every color appears an even number of times along the walk.
bool walk_is_parity(const Graph& g, const EdgeColoring& phi,
                    const std::vector<int>& walk);

// Canonical edge-coloring generated by an injective labeling. Throws when the
// labeling is not injective or has the wrong size.
EdgeColoring canonical_from_labeling(const Graph& g, const Labeling& f);

struct OracleLimits {
  int max_colors = 20;
  // The BFS explores at most n * 2^num_colors states.
  std::int64_t max_states = std::int64_t{1} << 26;
};

// Exhaustive search for an open parity walk over (vertex, parity) states,
// tried from every start vertex. Returns a witness walk, or nothing exactly
// when the coloring is a spec. Cross-validation tool; the production check is
// is_spec/canonicalize.
std::optional<WalkWitness> parity_walk_oracle(const Graph& g,
                                              const EdgeColoring& phi,
                                              const OracleLimits& limits = {});

struct Canonicalization {
  bool spec = false;
  // First pair of vertices whose walk-image cosets collide (iff not a spec);
  // such a pair is joined by an open parity walk.
  std::optional<std::pair<int, int>> collision;
  // Vertex -> canonical coset representative. Injective iff spec.
  Labeling labeling;
  // The induced coloring phi*; equals pi o phi and never uses more colors.
  EdgeColoring coloring_star;
  // Stable color names for phi*: hex of the reduced representative vector,
  // indexed by phi*-id - 1.
  std::vector<std::string> star_color_names;
  // pi: refinement_map[c-1] is the phi*-id of phi-color c.
  std::vector<int> refinement_map;
  // C_phi: span of the phi-images of cycles; equals S_r for a spec.
  Gf2Basis cycle_space;
};

// Computes walk-images along a BFS tree from the root, the cycle-image span,
// coset-reduced vertex labels, and the induced coloring. The labeling is
// injective iff phi is a spec; the collision pair is reported otherwise.
Canonicalization canonicalize(const Graph& g, const EdgeColoring& phi, int root);

// Polynomial spec check via canonicalize (no state-space search).
bool is_spec(const Graph& g, const EdgeColoring& phi, int root = 0);

struct PecBudget {
  int max_vertices = 24;
  std::int64_t max_steps = 50'000'000;
};

// True iff no simple path uses every color an even number of times. Plain
// backtracking over simple paths; memoization on (endpoint, parity) states is
// unsound under the simple-path constraint, so none is used. Throws
// BudgetError (distinct from false) when the graph or search exceeds budget.
bool is_pec(const Graph& g, const EdgeColoring& phi, const PecBudget& budget = {});

bool is_proper(const Graph& g, const EdgeColoring& phi);

// True iff every color class of phi is contained in a single class of
// phi_star. Throws when the colorings cover different edge sets.
bool is_refinement(const EdgeColoring& phi, const EdgeColoring& phi_star);

// From a spec of K_n (edges in complete_graph(n) id order), builds the
// coloring of K_{n,n} that copies phi(v_i v_j) onto x_i y_j and x_j y_i and
// spends one new color on the matching x_i y_i. The result is a spec with
// num_colors(phi) + 1 colors.
EdgeColoring lift_spec_to_biclique(int n, const EdgeColoring& phi);

// dim C_phi: dimension of the span of cycle images under the atomic encoding.
int cycle_space_image_dim(const Graph& g, const EdgeColoring& phi);

}  // namespace pec
