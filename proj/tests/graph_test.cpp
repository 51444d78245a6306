#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pec/graph.hpp"
#include "pec/json_io.hpp"
#include "pec/util.hpp"

using pec::Graph;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
  return {g.edges().begin(), g.edges().end()};
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  const Graph g(3, {{2, 0}});
  CHECK(g.edge(0) == std::pair<int, int>{0, 2});
}

TEST_CASE("path powers") {
  const Graph p4 = pec::path_power(4, 1);
  CHECK(p4.edge_count() == 3);

  const Graph p52 = pec::path_power(5, 2);
  CHECK(edge_set(p52) == std::set<std::pair<int, int>>{
                             {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});

  CHECK_THROWS_AS(pec::path_power(4, 4), std::invalid_argument);

  // Edge count identity: sum over i of min(ell, n-1-i).
  for (int n : {2, 5, 9, 16}) {
    for (int ell = 1; ell < n; ++ell) {
      int expected = 0;
      for (int i = 0; i < n; ++i) expected += std::min(ell, n - 1 - i);
      CHECK(pec::path_power(n, ell).edge_count() == expected);
    }
  }
}

TEST_CASE("bipartite path powers") {
  // For ell = 1 only the unit steps have odd difference within distance 2.
  const Graph b = pec::bipartite_path_power(6, 1);
  CHECK(edge_set(b) == std::set<std::pair<int, int>>{
                           {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});

  for (int n : {4, 9, 16}) {
    for (int ell = 1; ell <= 3; ++ell) {
      const Graph bp = pec::bipartite_path_power(n, ell);
      CHECK(bp.is_bipartite());
      // Subgraph of the doubled path power.
      const Graph pp = pec::path_power(n, std::min(2 * ell, n - 1));
      const auto pp_edges = edge_set(pp);
      for (const auto& e : bp.edges()) CHECK(pp_edges.count(e) == 1);
    }
  }
}

TEST_CASE("hypercube") {
  const Graph q2 = pec::hypercube_graph(2);
  CHECK(q2.vertex_count() == 4);
  CHECK(q2.edge_count() == 4);
  CHECK(q2.is_connected());
  CHECK(q2.is_bipartite());
  for (int v = 0; v < 4; ++v) CHECK(q2.degree(v) == 2);  // it is a 4-cycle

  for (int k = 1; k <= 6; ++k) {
    const Graph q = pec::hypercube_graph(k);
    CHECK(q.edge_count() == k * (1 << (k - 1)));
    CHECK(q.is_bipartite());
    CHECK(q.is_connected());
  }
}

TEST_CASE("cut_edge_join") {
  const Graph k2 = pec::complete_graph(2);
  const Graph p4 = pec::cut_edge_join(k2, k2, 0, 0);
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.is_connected());
  int leaves = 0;
  for (int v = 0; v < 4; ++v) leaves += p4.degree(v) == 1;
  CHECK(leaves == 2);  // a path

  const Graph mid = pec::cut_edge_join(pec::path_graph(2), pec::path_graph(2), 1, 0);
  CHECK(edge_set(mid) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

  CHECK_THROWS_AS(pec::cut_edge_join(k2, k2, 2, 0), std::invalid_argument);
}

TEST_CASE("cut_edge_join adds exactly one bridge at the join") {
  const Graph c4 = pec::cycle_graph(4);
  const Graph c5 = pec::cycle_graph(5);
  const Graph joined = pec::cut_edge_join(c4, c5, 1, 2);
  CHECK(joined.bridges().size() == c4.bridges().size() + c5.bridges().size() + 1);
  CHECK(joined.bridges() == std::vector<int>{joined.edge_count() - 1});

  const Graph trees = pec::cut_edge_join(pec::path_graph(3), pec::path_graph(4), 0, 3);
  CHECK(trees.bridges().size() == 2 + 3 + 1);
}

TEST_CASE("knn_path_graph") {
  const pec::KnnPathGraph inst = pec::knn_path_graph(4);
  CHECK(inst.graph.vertex_count() == 2 * 4 + 16);
  CHECK(inst.even_power_of_two);
  CHECK(inst.graph.is_bipartite());
  const auto bridges = inst.graph.bridges();
  CHECK(std::find(bridges.begin(), bridges.end(), inst.cut_edge) != bridges.end());

  const pec::KnnPathGraph small = pec::knn_path_graph(2);
  CHECK(small.graph.vertex_count() == 8);
  CHECK_FALSE(small.even_power_of_two);  // 2 = 2^1, odd exponent

  // n = 16 stays inside the default 2^20 vertex cap.
  CHECK(pec::knn_path_graph(16).graph.vertex_count() == 32 + (1 << 16));
  CHECK_THROWS_AS(pec::knn_path_graph(21), pec::BudgetError);
}

TEST_CASE("hub_family_graph") {
  const pec::HubFamilyGraph k8 = pec::hub_family_graph(8);
  CHECK(k8.r == 2);
  CHECK(k8.graph.vertex_count() == 1 + 256 + 16);
  CHECK(k8.graph.degree(0) == 2);
  CHECK(k8.spans.size() == 2);
  CHECK(k8.spans[1] == std::pair<int, int>{1, 17});     // Z_2 comes first
  CHECK(k8.spans[0] == std::pair<int, int>{17, 273});   // then Z_1
  CHECK(k8.graph.is_connected());

  const pec::HubFamilyGraph k1 = pec::hub_family_graph(1);
  CHECK(k1.r == 1);
  CHECK(k1.graph.vertex_count() == 3);  // hub plus bipartite_path_power(2, 1)
  CHECK(k1.graph.edge_count() == 2);

  CHECK_THROWS_AS(pec::hub_family_graph(27), pec::BudgetError);
  CHECK_THROWS_AS(pec::hub_family_graph(64), pec::BudgetError);
}

TEST_CASE("bfs ordering and back degrees") {
  const pec::VertexOrdering p4 = pec::bfs_ordering(pec::path_graph(4), 0);
  CHECK(p4.order == std::vector<int>{0, 1, 2, 3});
  CHECK(p4.back_degrees == std::vector<int>{0, 1, 1, 1});

  const pec::VertexOrdering pp = pec::bfs_ordering(pec::path_power(6, 2), 0);
  CHECK(pp.order == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(pp.back_degrees == std::vector<int>{0, 1, 2, 2, 2, 2});

  const pec::VertexOrdering k4 = pec::bfs_ordering(pec::complete_graph(4), 0);
  CHECK(k4.back_degrees == std::vector<int>{0, 1, 2, 3});

  const Graph disconnected(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(pec::bfs_ordering(disconnected, 0), std::invalid_argument);
}

TEST_CASE("back degrees sum to the edge count") {
  for (auto g : {pec::path_power(9, 3), pec::complete_graph(6),
                 pec::hypercube_graph(3), pec::cycle_graph(7)}) {
    const pec::VertexOrdering ordering = pec::bfs_ordering(g, 0);
    int sum = 0;
    for (int d : ordering.back_degrees) sum += d;
    CHECK(sum == g.edge_count());
  }
}

TEST_CASE("make_ordering validates permutations") {
  const Graph g = pec::path_graph(3);
  CHECK_THROWS_AS(pec::make_ordering(g, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(pec::make_ordering(g, {0, 1, 1}), std::invalid_argument);
  const pec::VertexOrdering reversed = pec::make_ordering(g, {2, 1, 0});
  CHECK(reversed.back_degrees == std::vector<int>{0, 1, 1});
}

TEST_CASE("graph json round trip") {
  for (auto g : {pec::complete_bipartite(2, 3), pec::cycle_graph(5),
                 pec::hub_family_graph(3).graph}) {
    const Graph back = pec::graph_from_json(pec::graph_to_json(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
  CHECK_THROWS_AS(pec::graph_from_json(nlohmann::json{{"n", 2}}),
                  std::invalid_argument);
}

TEST_CASE("dot export") {
  const std::string dot = pec::graph_to_dot(pec::path_graph(3));
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
}
