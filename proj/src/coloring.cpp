#include "pec/coloring.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "pec/util.hpp"

namespace pec {

EdgeColoring::EdgeColoring(const std::vector<int>& colors_by_edge) {
  colors_.reserve(colors_by_edge.size());
  std::unordered_map<int, int> renumber;
  for (int c : colors_by_edge) {
    if (c < 1) throw std::invalid_argument("EdgeColoring: ids must be >= 1");
    auto [it, inserted] =
        renumber.emplace(c, static_cast<int>(renumber.size()) + 1);
    (void)inserted;
    colors_.push_back(it->second);
  }
  num_colors_ = static_cast<int>(renumber.size());
}

bool Labeling::injective() const {
  std::map<Gf2Vector, int> seen;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!seen.emplace(labels[v], static_cast<int>(v)).second) return false;
  }
  return true;
}

bool walk_is_parity(const Graph& g, const EdgeColoring& phi,
                    const std::vector<int>& walk) {
  if (phi.size() != g.edge_count())
    throw std::invalid_argument("walk_is_parity: coloring size mismatch");
  std::vector<int> parity(phi.num_colors() + 1, 0);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const auto id = g.edge_id(walk[i], walk[i + 1]);
    if (!id) throw std::invalid_argument("walk_is_parity: not a walk");
    parity[phi.color(*id)] ^= 1;
  }
  return std::all_of(parity.begin(), parity.end(), [](int p) { return p == 0; });
}

EdgeColoring canonical_from_labeling(const Graph& g, const Labeling& f) {
  if (static_cast<int>(f.labels.size()) != g.vertex_count())
    throw std::invalid_argument("canonical_from_labeling: labeling size mismatch");
  if (!f.injective())
    throw std::invalid_argument("canonical_from_labeling: labeling not injective");
  std::map<Gf2Vector, int> ids;
  std::vector<int> colors;
  colors.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    const Gf2Vector color = f.labels[u] + f.labels[v];
    auto [it, inserted] = ids.emplace(color, static_cast<int>(ids.size()) + 1);
    (void)inserted;
    colors.push_back(it->second);
  }
  return EdgeColoring(colors);
}

std::optional<WalkWitness> parity_walk_oracle(const Graph& g,
                                              const EdgeColoring& phi,
                                              const OracleLimits& limits) {
  if (phi.size() != g.edge_count())
    throw std::invalid_argument("parity_walk_oracle: coloring size mismatch");
  if (!g.is_connected())
    throw std::invalid_argument("parity_walk_oracle: graph must be connected");
  const int n = g.vertex_count();
  const int colors = phi.num_colors();
  if (colors > limits.max_colors)
    throw BudgetError("parity_walk_oracle: too many colors for the state search");
  const std::int64_t states = static_cast<std::int64_t>(n) << colors;
  if (states > limits.max_states)
    throw BudgetError("parity_walk_oracle: state space exceeds cap");

  // State key = mask * n + vertex. A nonempty walk from (start, 0) to (v, 0)
  // with v != start is exactly an open parity walk from start to v.
  for (int start = 0; start < n; ++start) {
    std::vector<char> seen(static_cast<std::size_t>(states), 0);
    std::unordered_map<std::int64_t, std::int64_t> parent;
    std::queue<std::int64_t> queue;
    const std::int64_t origin = start;
    seen[origin] = 1;
    queue.push(origin);
    while (!queue.empty()) {
      const std::int64_t key = queue.front();
      queue.pop();
      const int v = static_cast<int>(key % n);
      const std::uint64_t mask = static_cast<std::uint64_t>(key / n);
      for (auto [nb, id] : g.incident(v)) {
        const std::uint64_t next_mask =
            mask ^ (std::uint64_t{1} << (phi.color(id) - 1));
        const std::int64_t next = static_cast<std::int64_t>(next_mask) * n + nb;
        if (seen[next]) continue;
        seen[next] = 1;
        parent[next] = key;
        if (next_mask == 0 && nb != start) {
          WalkWitness witness;
          std::int64_t cursor = next;
          while (true) {
            witness.vertices.push_back(static_cast<int>(cursor % n));
            if (cursor == origin) break;
            cursor = parent.at(cursor);
          }
          std::reverse(witness.vertices.begin(), witness.vertices.end());
          return witness;
        }
        queue.push(next);
      }
    }
  }
  return std::nullopt;
}

Canonicalization canonicalize(const Graph& g, const EdgeColoring& phi, int root) {
  if (phi.size() != g.edge_count())
    throw std::invalid_argument("canonicalize: coloring size mismatch");
  if (root < 0 || root >= g.vertex_count())
    throw std::invalid_argument("canonicalize: root out of range");
  const int n = g.vertex_count();
  const int width = phi.num_colors();

  // Walk images g(v) along a BFS tree from the root, in the atomic encoding.
  std::vector<Gf2Vector> walk_image(n, Gf2Vector(width));
  std::vector<char> seen(n, 0);
  std::queue<int> queue;
  queue.push(root);
  seen[root] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (auto [nb, id] : g.incident(v)) {
      if (seen[nb]) continue;
      seen[nb] = 1;
      ++reached;
      walk_image[nb] = walk_image[v] + Gf2Vector::atom(phi.color(id), width);
      queue.push(nb);
    }
  }
  if (reached != n)
    throw std::invalid_argument("canonicalize: graph must be connected");

  Canonicalization result;
  // C_phi = span of cycle images; tree edges contribute zero.
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& [u, v] = g.edge(id);
    result.cycle_space.insert(walk_image[u] + walk_image[v] +
                              Gf2Vector::atom(phi.color(id), width));
  }

  result.labeling.labels.reserve(n);
  for (int v = 0; v < n; ++v)
    result.labeling.labels.push_back(result.cycle_space.reduce(walk_image[v]));

  result.spec = true;
  std::map<Gf2Vector, int> label_owner;
  for (int v = 0; v < n && result.spec; ++v) {
    auto [it, inserted] = label_owner.emplace(result.labeling.labels[v], v);
    if (!inserted) {
      result.spec = false;
      result.collision = std::make_pair(it->second, v);
    }
  }

  // phi*(uv) is the coset of the atomic color of uv; reduce is linear, so this
  // also equals labels[u] + labels[v].
  std::vector<Gf2Vector> star_vector(width + 1, Gf2Vector(width));
  for (int c = 1; c <= width; ++c)
    star_vector[c] = result.cycle_space.reduce(Gf2Vector::atom(c, width));

  std::map<Gf2Vector, int> star_ids;
  std::vector<int> star_colors;
  star_colors.reserve(g.edge_count());
  result.refinement_map.assign(width, 0);
  for (int id = 0; id < g.edge_count(); ++id) {
    const int c = phi.color(id);
    auto [it, inserted] =
        star_ids.emplace(star_vector[c], static_cast<int>(star_ids.size()) + 1);
    if (inserted) result.star_color_names.push_back(star_vector[c].to_hex());
    star_colors.push_back(it->second);
    result.refinement_map[c - 1] = it->second;
  }
  result.coloring_star = EdgeColoring(star_colors);
  return result;
}

bool is_spec(const Graph& g, const EdgeColoring& phi, int root) {
  return canonicalize(g, phi, root).spec;
}

bool is_proper(const Graph& g, const EdgeColoring& phi) {
  if (phi.size() != g.edge_count())
    throw std::invalid_argument("is_proper: coloring size mismatch");
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (phi.color(inc[i].second) == phi.color(inc[j].second)) return false;
  }
  return true;
}

namespace {

// Backtracking enumeration of simple paths carrying the color-parity vector.
struct PathSearch {
  const Graph& g;
  const EdgeColoring& phi;
  std::int64_t steps_left;
  std::vector<char> visited;
  std::vector<std::uint64_t> parity;
  int nonzero_words = 0;

  PathSearch(const Graph& graph, const EdgeColoring& coloring,
             std::int64_t budget)
      : g(graph),
        phi(coloring),
        steps_left(budget),
        visited(graph.vertex_count(), 0),
        parity((coloring.num_colors() + 63) / 64, 0) {}

  void flip(int color) {
    const std::size_t w = static_cast<std::size_t>(color - 1) / 64;
    const std::uint64_t before = parity[w];
    parity[w] ^= std::uint64_t{1} << ((color - 1) % 64);
    if (before == 0)
      ++nonzero_words;
    else if (parity[w] == 0)
      --nonzero_words;
  }

  // Returns true when a parity path with >= 1 edge is found.
  bool extend(int v, int edges_used) {
    if (edges_used > 0 && nonzero_words == 0) return true;
    for (auto [nb, id] : g.incident(v)) {
      if (visited[nb]) continue;
      if (--steps_left < 0) throw BudgetError("is_pec: step budget exceeded");
      visited[nb] = 1;
      flip(phi.color(id));
      if (extend(nb, edges_used + 1)) return true;
      flip(phi.color(id));
      visited[nb] = 0;
    }
    return false;
  }
};

}  // namespace

bool is_pec(const Graph& g, const EdgeColoring& phi, const PecBudget& budget) {
  if (phi.size() != g.edge_count())
    throw std::invalid_argument("is_pec: coloring size mismatch");
  if (!g.is_connected())
    throw std::invalid_argument("is_pec: graph must be connected");
  if (g.vertex_count() > budget.max_vertices)
    throw BudgetError("is_pec: vertex count exceeds path-enumeration budget");
  // Incident repeats are already two-edge parity paths.
  if (!is_proper(g, phi)) return false;
  PathSearch search(g, phi, budget.max_steps);
  for (int start = 0; start < g.vertex_count(); ++start) {
    search.visited[start] = 1;
    if (search.extend(start, 0)) return false;
    search.visited[start] = 0;
  }
  return true;
}

bool is_refinement(const EdgeColoring& phi, const EdgeColoring& phi_star) {
  if (phi.size() != phi_star.size())
    throw std::invalid_argument("is_refinement: edge sets differ");
  std::vector<int> image(phi.num_colors() + 1, 0);
  for (int id = 0; id < phi.size(); ++id) {
    int& slot = image[phi.color(id)];
    if (slot == 0)
      slot = phi_star.color(id);
    else if (slot != phi_star.color(id))
      return false;
  }
  return true;
}

EdgeColoring lift_spec_to_biclique(int n, const EdgeColoring& phi) {
  if (n < 1) throw std::invalid_argument("lift_spec_to_biclique: n must be >= 1");
  const Graph kn = complete_graph(n);
  if (phi.size() != kn.edge_count())
    throw std::invalid_argument("lift_spec_to_biclique: coloring size mismatch");
  if (n >= 2 && !is_spec(kn, phi, 0))
    throw std::invalid_argument("lift_spec_to_biclique: input is not a spec");

  const int fresh = phi.num_colors() + 1;
  // Edge (x_i, y_j) of complete_bipartite(n, n) has id i*n + j.
  std::vector<int> colors(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        colors[static_cast<std::size_t>(i) * n + j] = fresh;
      } else {
        const int a = std::min(i, j), b = std::max(i, j);
        const int kn_id = a * n - a * (a + 1) / 2 + (b - a - 1);
        colors[static_cast<std::size_t>(i) * n + j] = phi.color(kn_id);
      }
    }
  }
  return EdgeColoring(colors);
}

int cycle_space_image_dim(const Graph& g, const EdgeColoring& phi) {
  return canonicalize(g, phi, 0).cycle_space.dim();
}

}  // namespace pec
