#include "pec/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "pec/util.hpp"

namespace pec {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
  edges_.reserve(edge_list.size());
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    auto e = std::minmax(u, v);
    if (!seen.insert(e).second)
      throw std::invalid_argument("Graph: duplicate edge");
    edges_.emplace_back(e.first, e.second);
  }
  adjacency_.assign(n, {});
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    adjacency_[edges_[id].first].emplace_back(edges_[id].second, id);
    adjacency_[edges_[id].second].emplace_back(edges_[id].first, id);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<int> Graph::edge_id(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return std::nullopt;
  for (auto [nb, id] : adjacency_[u])
    if (nb == v) return id;
  return std::nullopt;
}

bool Graph::is_connected() const {
  std::vector<char> seen(n_, 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (auto [nb, id] : adjacency_[v]) {
      (void)id;
      if (!seen[nb]) {
        seen[nb] = 1;
        ++reached;
        queue.push(nb);
      }
    }
  }
  return reached == n_;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  for (int start = 0; start < n_; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (auto [nb, id] : adjacency_[v]) {
        (void)id;
        if (side[nb] == -1) {
          side[nb] = 1 - side[v];
          queue.push(nb);
        } else if (side[nb] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> Graph::bridges() const {
  // Iterative lowpoint DFS; recursion would overflow on long paths.
  std::vector<int> disc(n_, -1), low(n_, 0);
  std::vector<int> out;
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  for (int start = 0; start < n_; ++start) {
    if (disc[start] != -1) continue;
    std::vector<Frame> stack{{start, -1, 0}};
    disc[start] = low[start] = timer++;
    while (!stack.empty()) {
      Frame& frame = stack.back();
      const int v = frame.v;
      if (frame.next < adjacency_[v].size()) {
        auto [nb, id] = adjacency_[v][frame.next++];
        if (id == frame.parent_edge) continue;
        if (disc[nb] == -1) {
          disc[nb] = low[nb] = timer++;
          stack.push_back({nb, id, 0});
        } else {
          low[v] = std::min(low[v], disc[nb]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          const int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) out.push_back(frame.parent_edge);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_positive(int value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace

Graph complete_graph(int n) {
  require_positive(n, "complete_graph: n");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int s, int t) {
  require_positive(s, "complete_bipartite: s");
  require_positive(t, "complete_bipartite: t");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
  return Graph(s + t, std::move(edges));
}

Graph path_graph(int n) {
  require_positive(n, "path_graph: n");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph path_power(int n, int ell) {
  require_positive(n, "path_power: n");
  require_positive(ell, "path_power: ell");
  if (ell > n - 1)
    throw std::invalid_argument("path_power: ell must be at most n-1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j - i <= ell; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph bipartite_path_power(int n, int ell) {
  require_positive(n, "bipartite_path_power: n");
  require_positive(ell, "bipartite_path_power: ell");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j - i <= 2 * ell; ++j)
      if ((j - i) % 2 == 1) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph(n, std::move(edges));
}

Graph hypercube_graph(int k) {
  require_positive(k, "hypercube_graph: k");
  if (k > 20) throw BudgetError("hypercube_graph: dimension exceeds vertex cap");
  const int n = 1 << k;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < k; ++b)
      if (!(i & (1 << b))) edges.emplace_back(i, i | (1 << b));
  return Graph(n, std::move(edges));
}

Graph cut_edge_join(const Graph& g1, const Graph& g2, int u, int v) {
  if (u < 0 || u >= g1.vertex_count())
    throw std::invalid_argument("cut_edge_join: u out of range");
  if (v < 0 || v >= g2.vertex_count())
    throw std::invalid_argument("cut_edge_join: v out of range");
  const int shift = g1.vertex_count();
  std::vector<std::pair<int, int>> edges = g1.edges();
  for (auto [a, b] : g2.edges()) edges.emplace_back(a + shift, b + shift);
  edges.emplace_back(u, v + shift);
  return Graph(g1.vertex_count() + g2.vertex_count(), std::move(edges));
}

KnnPathGraph knn_path_graph(int n, std::int64_t vertex_cap) {
  if (n < 2) throw std::invalid_argument("knn_path_graph: n must be >= 2");
  if (n > 62) throw BudgetError("knn_path_graph: 2^n overflows");
  const std::int64_t path_len = std::int64_t{1} << n;
  if (2 * n + path_len > vertex_cap)
    throw BudgetError("knn_path_graph: size exceeds vertex cap");
  Graph knn = complete_bipartite(n, n);
  Graph path = path_graph(static_cast<int>(path_len));
  KnnPathGraph out{cut_edge_join(knn, path, 0, 0), 0, false};
  out.cut_edge = out.graph.edge_count() - 1;
  const bool power_of_two = (n & (n - 1)) == 0;
  out.even_power_of_two = power_of_two && (floor_lg(n) % 2 == 0);
  return out;
}

HubFamilyGraph hub_family_graph(int k, std::int64_t vertex_cap) {
  require_positive(k, "hub_family_graph: k");
  int r = 1;
  while (static_cast<std::int64_t>(r + 1) * (r + 1) * (r + 1) <= k) ++r;

  std::vector<std::int64_t> sizes(r + 1, 0);
  std::int64_t total = 1;
  for (int ell = 1; ell <= r; ++ell) {
    const int exponent = (k + ell - 1) / ell;  // ceil(k/ell)
    if (exponent > 62) throw BudgetError("hub_family_graph: component overflows");
    sizes[ell] = std::int64_t{1} << exponent;
    total += sizes[ell];
  }
  if (total > vertex_cap)
    throw BudgetError("hub_family_graph: size exceeds vertex cap");

  std::vector<std::pair<int, int>> spans(r, {0, 0});
  std::vector<std::pair<int, int>> edges;
  int offset = 1;
  for (int ell = r; ell >= 1; --ell) {
    const int size = static_cast<int>(sizes[ell]);
    spans[ell - 1] = {offset, offset + size};
    edges.emplace_back(0, offset);  // hub cut-edge to the component's v1
    Graph component = bipartite_path_power(size, ell);
    for (auto [a, b] : component.edges())
      edges.emplace_back(a + offset, b + offset);
    offset += size;
  }
  return HubFamilyGraph{Graph(static_cast<int>(total), std::move(edges)), r,
                        std::move(spans)};
}

VertexOrdering bfs_ordering(const Graph& g, int root) {
  if (root < 0 || root >= g.vertex_count())
    throw std::invalid_argument("bfs_ordering: root out of range");
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> order;
  order.reserve(n);
  std::queue<int> queue;
  queue.push(root);
  seen[root] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    order.push_back(v);
    for (auto [nb, id] : g.incident(v)) {
      (void)id;
      if (!seen[nb]) {
        seen[nb] = 1;
        queue.push(nb);
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("bfs_ordering: graph is not connected");
  return make_ordering(g, std::move(order));
}

VertexOrdering make_ordering(const Graph& g, std::vector<int> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("make_ordering: order has wrong length");
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    if (v < 0 || v >= n || position[v] != -1)
      throw std::invalid_argument("make_ordering: not a permutation");
    position[v] = i;
  }
  VertexOrdering result;
  result.order = std::move(order);
  result.back_degrees.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (auto [nb, id] : g.incident(result.order[i])) {
      (void)id;
      if (position[nb] < i) ++count;
    }
    result.back_degrees[i] = count;
  }
  return result;
}

}  // namespace pec
