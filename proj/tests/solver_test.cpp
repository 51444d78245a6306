#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pec/bounds.hpp"
#include "pec/coloring.hpp"
#include "pec/experiments.hpp"
#include "pec/graph.hpp"
#include "pec/solver.hpp"
#include "pec/util.hpp"

using pec::EdgeColoring;
using pec::Graph;

namespace {

Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng() % v), v);
  return Graph(n, std::move(edges));
}

// Definition-level oracle: enumerate all colorings with at most k colors
// (canonical numbering) and accept the first pec.
bool any_pec_with(const Graph& g, int k, std::vector<int>& cols, int idx,
                  int max_used) {
  if (idx == g.edge_count()) return pec::is_pec(g, EdgeColoring(cols));
  for (int c = 1; c <= std::min(max_used + 1, k); ++c) {
    cols[idx] = c;
    if (any_pec_with(g, k, cols, idx + 1, std::max(max_used, c))) return true;
  }
  return false;
}

int brute_force_p(const Graph& g) {
  for (int k = 1;; ++k) {
    std::vector<int> cols(g.edge_count());
    if (any_pec_with(g, k, cols, 0, 0)) return k;
  }
}

// Same enumeration with the algebraic spec check: an oracle for the labeling
// search that is independent of its symmetry breaking.
bool any_spec_with(const Graph& g, int k, std::vector<int>& cols, int idx,
                   int max_used) {
  if (idx == g.edge_count()) return pec::is_spec(g, EdgeColoring(cols), 0);
  for (int c = 1; c <= std::min(max_used + 1, k); ++c) {
    cols[idx] = c;
    if (any_spec_with(g, k, cols, idx + 1, std::max(max_used, c))) return true;
  }
  return false;
}

int brute_force_phat(const Graph& g) {
  for (int k = 1;; ++k) {
    std::vector<int> cols(g.edge_count());
    if (any_spec_with(g, k, cols, 0, 0)) return k;
  }
}

}  // namespace

TEST_CASE("exact_phat on complete graphs") {
  CHECK(pec::exact_phat(pec::complete_graph(2)).value == 1);
  CHECK(pec::exact_phat(pec::complete_graph(3)).value == 3);
  CHECK(pec::exact_phat(pec::complete_graph(4)).value == 3);
  CHECK(pec::exact_phat(pec::complete_graph(5)).value == 7);
}

TEST_CASE("exact_phat on complete bipartite graphs") {
  CHECK(pec::exact_phat(pec::complete_bipartite(2, 3)).value == 4);
  CHECK(pec::exact_phat(pec::complete_bipartite(2, 2)).value == 2);
  CHECK(pec::exact_phat(pec::complete_bipartite(3, 3)).value == 4);
}

TEST_CASE("exact_phat on paths and cycles") {
  CHECK(pec::exact_phat(pec::path_graph(8)).value == 3);
  CHECK(pec::exact_phat(pec::path_graph(1)).value == 0);
  CHECK(pec::exact_phat(pec::cycle_graph(5)).value == 4);
  CHECK(pec::exact_phat(pec::cycle_graph(6)).value == 3);
}

TEST_CASE("exact_phat witnesses verify") {
  for (const Graph& g : {pec::complete_graph(5), pec::cycle_graph(7),
                         pec::complete_bipartite(3, 4), pec::path_power(9, 2)}) {
    const pec::PhatResult result = pec::exact_phat(g);
    REQUIRE(result.exact);
    REQUIRE(result.witness.has_value());
    const EdgeColoring witness = pec::canonical_from_labeling(g, *result.witness);
    CHECK(witness.num_colors() == result.value);
    CHECK(pec::is_spec(g, witness, 0));
  }
}

TEST_CASE("exact_p on small graphs") {
  CHECK(pec::exact_p(pec::complete_graph(2)).value == 1);
  CHECK(pec::exact_p(pec::path_graph(8)).value == 3);
  CHECK(pec::exact_p(pec::cycle_graph(6)).value == 3);
  CHECK(pec::exact_p(pec::cycle_graph(8)).value == 3);
  // chi'(K_3) = 3 already forces three colors, and they suffice.
  CHECK(pec::exact_p(pec::complete_graph(3)).value == 3);
}

TEST_CASE("exact_p on C_5 needs four colors") {
  // Any proper 3-coloring of C_5 has classes of sizes (2,2,1): the two
  // 2-classes alternate along the arc complementing the singleton edge,
  // which makes that 4-edge arc a parity path. So p(C_5) = 4.
  const Graph c5 = pec::cycle_graph(5);
  const pec::PResult result = pec::exact_p(c5);
  REQUIRE(result.exact);
  CHECK(result.value == 4);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->num_colors() == 4);
  CHECK(pec::is_pec(c5, *result.witness));
}

TEST_CASE("exact_p matches the enumeration oracle on small random graphs") {
  std::mt19937_64 rng(29);
  int checked = 0;
  while (checked < 10) {
    const Graph g = pec::random_connected_graph(rng, 6);
    if (g.edge_count() > 9) continue;
    ++checked;
    const pec::PResult result = pec::exact_p(g);
    REQUIRE(result.exact);
    CHECK(result.value == brute_force_p(g));
    CHECK(pec::is_pec(g, *result.witness));
    CHECK(result.witness->num_colors() == result.value);
  }
}

TEST_CASE("exact_phat matches the enumeration oracle on small random graphs") {
  std::mt19937_64 rng(37);
  int checked = 0;
  while (checked < 8) {
    const Graph g = pec::random_connected_graph(rng, 6);
    if (g.edge_count() > 9) continue;
    ++checked;
    const pec::PhatResult result = pec::exact_phat(g);
    REQUIRE(result.exact);
    CHECK(result.value == brute_force_phat(g));
  }
}

TEST_CASE("solver inequalities on assorted graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = pec::random_connected_graph(rng, 7);
    const pec::PhatResult phat = pec::exact_phat(g);
    const pec::PResult p = pec::exact_p(g);
    REQUIRE(phat.exact);
    REQUIRE(p.exact);
    CHECK(phat.value >= p.value);
    CHECK(p.value >= pec::ceil_lg(g.vertex_count()));
    // Cross-module soundness of the lower bounds.
    const pec::VertexOrdering ordering = pec::bfs_ordering(g, 0);
    CHECK(phat.value >= pec::saturating_min_sum({ordering.back_degrees}).value);
    const EdgeColoring witness = pec::canonical_from_labeling(g, *phat.witness);
    CHECK(phat.value >= pec::sr_bound(g, witness, 0) - 1e-9);
  }
}

TEST_CASE("trees have equal parity numbers") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph tree = random_tree(rng, n);
    const pec::PhatResult phat = pec::exact_phat(tree);
    const pec::PResult p = pec::exact_p(tree);
    REQUIRE(phat.exact);
    REQUIRE(p.exact);
    CHECK(phat.value == p.value);
    // Tree embeds in the hypercube of its parity number's dimension iff the
    // value hits ceil(lg n).
    const auto embedding = pec::hypercube_embedding(tree);
    CHECK(embedding.has_value() == (phat.value == pec::ceil_lg(n)));
  }
  // A large star is the extreme tree case.
  const Graph star = pec::complete_bipartite(1, 15);
  CHECK(pec::exact_phat(star).value == 15);
  CHECK(pec::exact_p(star).value == 15);
}

TEST_CASE("interrupted search reports an interval") {
  // Refuting the 5-color target on C_31 walks a large chunk of the
  // self-avoiding walks of Q_5, so a 1 ms budget always interrupts.
  const Graph c31 = pec::cycle_graph(31);
  const pec::PhatResult result = pec::exact_phat(c31, {std::chrono::milliseconds(1)});
  CHECK_FALSE(result.exact);
  CHECK(result.lower >= 5);  // at least ceil(lg 31)
  CHECK(result.upper >= result.lower);
  REQUIRE(result.witness.has_value());
  const EdgeColoring witness = pec::canonical_from_labeling(c31, *result.witness);
  CHECK(witness.num_colors() == result.upper);
  CHECK(pec::is_spec(c31, witness, 0));
}

TEST_CASE("hypercube embedding") {
  const auto c6 = pec::hypercube_embedding(pec::cycle_graph(6));
  REQUIRE(c6.has_value());
  CHECK(c6->dimension == 3);

  const auto p4 = pec::hypercube_embedding(pec::path_graph(4));
  REQUIRE(p4.has_value());
  CHECK(p4->dimension == 2);

  CHECK_FALSE(pec::hypercube_embedding(pec::complete_graph(3)).has_value());
  CHECK_FALSE(pec::hypercube_embedding(pec::complete_bipartite(1, 4)).has_value());

  // Verify the embedding edge-wise here as well.
  const Graph c6g = pec::cycle_graph(6);
  for (const auto& [u, v] : c6g.edges()) {
    const std::uint64_t diff = c6->coords[u] ^ c6->coords[v];
    CHECK(diff != 0);
    CHECK((diff & (diff - 1)) == 0);
  }
}

TEST_CASE("havel_moravek_check") {
  // Coordinate coloring of Q_2.
  const Graph q2 = pec::hypercube_graph(2);
  std::vector<int> coords(q2.edge_count());
  for (int id = 0; id < q2.edge_count(); ++id) {
    const auto& [u, v] = q2.edge(id);
    coords[id] = (u ^ v) == 1 ? 1 : 2;
  }
  CHECK(pec::havel_moravek_check(q2, EdgeColoring(coords)));

  // A spec of C_4 whose cycle image is nonzero fails the cycle condition.
  CHECK_FALSE(pec::havel_moravek_check(pec::cycle_graph(4), EdgeColoring({1, 2, 1, 3})));

  // On trees the check degenerates to the pec condition.
  const Graph p5 = pec::path_graph(5);
  CHECK(pec::havel_moravek_check(p5, EdgeColoring({1, 2, 1, 3})) ==
        pec::is_pec(p5, EdgeColoring({1, 2, 1, 3})));
}

TEST_CASE("optimal specs of K_3 canonicalize to a deleted-vertex square coloring") {
  // Every optimal spec of K_3 uses 3 distinct colors; its canonical labels,
  // together with the one missing vector, must fill a 2-dimensional space.
  const Graph k3 = pec::complete_graph(3);
  std::vector<std::vector<int>> assignments = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                               {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (const auto& colors : assignments) {
    const pec::Canonicalization canon = pec::canonicalize(k3, EdgeColoring(colors), 0);
    REQUIRE(canon.spec);
    CHECK(canon.coloring_star.num_colors() == 3);
    std::set<pec::Gf2Vector> labels(canon.labeling.labels.begin(),
                                    canon.labeling.labels.end());
    pec::Gf2Basis span;
    for (const auto& l : labels) span.insert(l);
    CHECK(span.dim() == 2);
    // The three edge colors are the three nonzero vectors of that plane.
    std::set<pec::Gf2Vector> colors_seen;
    for (int id = 0; id < 3; ++id) {
      const auto& [u, v] = k3.edge(id);
      colors_seen.insert(canon.labeling.labels[u] + canon.labeling.labels[v]);
    }
    CHECK(colors_seen.size() == 3);
    for (const auto& c : colors_seen) CHECK(span.contains(c));
  }
}
