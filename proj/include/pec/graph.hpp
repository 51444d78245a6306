#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pec {

// Simple undirected graph with vertices 0..n-1 and stable edge ids given by
// construction order. Immutable after construction.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::pair<int, int>& edge(int id) const { return edges_.at(id); }

  // (neighbor, edge id) pairs, sorted by neighbor index.
  const std::vector<std::pair<int, int>>& incident(int v) const {
    return adjacency_.at(v);
  }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int max_degree() const;

  std::optional<int> edge_id(int u, int v) const;
  bool is_connected() const;
  bool is_bipartite() const;
  std::vector<int> bridges() const;  // cut-edge ids, ascending

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;            // stored as (min, max)
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// Permutation of the vertices together with back-degrees: back_degrees[i] is
// the number of neighbors of order[i] among order[0..i-1].
struct VertexOrdering {
  std::vector<int> order;
  std::vector<int> back_degrees;
};

inline constexpr std::int64_t kDefaultVertexCap = std::int64_t{1} << 20;

// Generators. Edge-id order is documented per generator and is the order the
// CLI expects for inline colorings.
Graph complete_graph(int n);                 // pairs (i,j), i<j, lexicographic
Graph complete_bipartite(int s, int t);      // X = 0..s-1, Y = s..s+t-1; (x_i, y_j) lex
Graph path_graph(int n);                     // edges (i, i+1)
Graph path_power(int n, int ell);            // pairs with |i-j| <= ell, lex
Graph bipartite_path_power(int n, int ell);  // |i-j| <= 2*ell and i,j of opposite parity, lex
Graph cycle_graph(int n);                    // (0,1),...,(n-2,n-1),(n-1,0)
Graph hypercube_graph(int k);                // i ~ j iff i xor j is a power of two

// Disjoint union of g1 and g2 (g2 vertex ids shifted by |V(g1)|) plus the
// edge (u, v'), which is a cut-edge. The new edge has the last edge id.
Graph cut_edge_join(const Graph& g1, const Graph& g2, int u, int v);

struct KnnPathGraph {
  Graph graph;
  int cut_edge = -1;
  bool even_power_of_two = false;  // whether n = 2^(2j) for some j >= 1
};

// K_{n,n} (X = 0..n-1, Y = n..2n-1) disjoint with a 2^n-vertex path
// (vertices 2n..2n+2^n-1 in path order), joined by the cut-edge from x_1 to
// the first path vertex. Bipartite; accepts any n >= 2 and records whether n
// is an even power of two.
KnnPathGraph knn_path_graph(int n, std::int64_t vertex_cap = kDefaultVertexCap);

struct HubFamilyGraph {
  Graph graph;
  int r = 0;
  // spans[l-1] = [begin, end) vertex range of the component with parameter l.
  std::vector<std::pair<int, int>> spans;
};

// Hub vertex 0 joined by a cut-edge to the first vertex of
// bipartite_path_power(2^ceil(k/l), l) for each l = 1..floor(k^(1/3)).
// Components are laid out largest parameter first, so the identity vertex
// order is the ordering used by the saturating lower-bound certificate.
// Edge ids: per component in that same order, the hub cut-edge first and
// then the component's edges in generator order.
HubFamilyGraph hub_family_graph(int k, std::int64_t vertex_cap = kDefaultVertexCap);

// BFS order from root with neighbors visited in ascending index order.
// Every vertex after the first has an earlier neighbor. Throws on
// disconnected input.
VertexOrdering bfs_ordering(const Graph& g, int root);

// Ordering from an explicit permutation; back-degrees are computed.
VertexOrdering make_ordering(const Graph& g, std::vector<int> order);

}  // namespace pec
