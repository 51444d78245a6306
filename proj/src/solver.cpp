#include "pec/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "pec/util.hpp"

namespace pec {

namespace {

using Clock = std::chrono::steady_clock;

struct TimeUp {};

constexpr int kMaxColorTarget = 20;  // the used[] table is 2^c entries

struct Deadline {
  Clock::time_point end;
  std::int64_t ticks = 0;

  explicit Deadline(const SolveBudget& budget) : end(Clock::now() + budget.wall) {}

  void poll() {
    if ((++ticks & 0xfff) == 0 && Clock::now() > end) throw TimeUp{};
  }
};

// Canonical coloring from labeling BFS position i with the binary tuple i.
// Always a spec, so it supplies an upper bound and witness for both solvers.
struct GreedyUpper {
  int colors = 0;
  Labeling labeling;
  EdgeColoring coloring;
};

GreedyUpper greedy_canonical(const Graph& g) {
  const VertexOrdering ordering = bfs_ordering(g, 0);
  const int n = g.vertex_count();
  const int width = ceil_lg(static_cast<std::uint64_t>(n));
  GreedyUpper out;
  std::vector<std::uint64_t> label(n, 0);
  for (int i = 0; i < n; ++i)
    label[ordering.order[i]] = static_cast<std::uint64_t>(i);
  out.labeling.labels.reserve(n);
  for (int v = 0; v < n; ++v)
    out.labeling.labels.push_back(Gf2Vector::from_mask(label[v], width));
  out.coloring = canonical_from_labeling(g, out.labeling);
  out.colors = out.coloring.num_colors();
  return out;
}

// Depth-first search over canonical labelings with target color count c.
// Labels live in F2^c; the first label is 0 and every newly independent
// label is forced to be the next standard atom, so the assigned labels span
// exactly {0,1}^dim at every node.
struct PhatSearch {
  const Graph& g;
  int c;
  Deadline& deadline;
  std::vector<int> order;                    // BFS order
  std::vector<std::vector<int>> back_edges;  // earlier positions per position
  std::vector<std::uint64_t> label;          // per position
  std::vector<char> used;                    // labels already assigned
  int used_count = 0;
  std::vector<std::uint64_t> color_list;
  int dim = 0;

  PhatSearch(const Graph& graph, int target, const VertexOrdering& ordering,
             Deadline& dl)
      : g(graph), c(target), deadline(dl), order(ordering.order) {
    const int n = g.vertex_count();
    back_edges.assign(n, {});
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    for (int i = 0; i < n; ++i) {
      for (auto [nb, id] : g.incident(order[i])) {
        (void)id;
        if (position[nb] < i) back_edges[i].push_back(position[nb]);
      }
    }
    label.assign(n, 0);
    used.assign(std::size_t{1} << c, 0);
    color_list.reserve(c);
  }

  bool has_color(std::uint64_t color) const {
    return std::find(color_list.begin(), color_list.end(), color) !=
           color_list.end();
  }

  bool dfs(int pos) {
    const int n = g.vertex_count();
    if (pos == n) return true;
    deadline.poll();
    // Not enough unused labels for the remaining vertices?
    if ((std::int64_t{1} << c) - used_count < n - pos) return false;
    const std::uint64_t span = std::uint64_t{1} << dim;
    for (std::uint64_t cand = 0; cand <= span; ++cand) {
      const bool fresh = cand == span;  // the next standard atom e_{dim+1}
      if (fresh) {
        if (dim >= c) break;
      } else if (used[cand]) {
        continue;
      }
      const std::size_t colors_before = color_list.size();
      bool ok = true;
      for (int bp : back_edges[pos]) {
        const std::uint64_t color = cand ^ label[bp];
        if (!has_color(color)) {
          if (static_cast<int>(color_list.size()) == c) {
            ok = false;
            break;
          }
          color_list.push_back(color);
        }
      }
      if (ok) {
        used[cand] = 1;
        ++used_count;
        label[pos] = cand;
        if (fresh) ++dim;
        if (dfs(pos + 1)) return true;
        if (fresh) --dim;
        used[cand] = 0;
        --used_count;
      }
      color_list.resize(colors_before);
    }
    return false;
  }

  Labeling witness() const {
    const int n = g.vertex_count();
    Labeling out;
    out.labels.assign(n, Gf2Vector(c));
    for (int i = 0; i < n; ++i)
      out.labels[order[i]] = Gf2Vector::from_mask(label[i], c);
    return out;
  }
};

}  // namespace

PhatResult exact_phat(const Graph& g, const SolveBudget& budget) {
  if (!g.is_connected())
    throw std::invalid_argument("exact_phat: graph must be connected");
  const int n = g.vertex_count();
  if (n == 1) {
    Labeling trivial;
    trivial.labels.emplace_back(0);
    return {true, 0, 0, 0, std::move(trivial)};
  }

  const GreedyUpper greedy = greedy_canonical(g);
  const int lb = std::max(ceil_lg(static_cast<std::uint64_t>(n)), g.max_degree());
  const VertexOrdering ordering = bfs_ordering(g, 0);
  Deadline deadline(budget);
  int c = lb;
  try {
    for (;; ++c) {
      if (c > kMaxColorTarget)
        throw BudgetError("exact_phat: color target exceeds supported range");
      PhatSearch search(g, c, ordering, deadline);
      search.used[0] = 1;  // first label is 0
      search.used_count = 1;
      if (search.dfs(1)) {
        PhatResult result{true, c, c, c, search.witness()};
        return result;
      }
    }
  } catch (const TimeUp&) {
    // Every target below c was refuted; the greedy canonical coloring
    // witnesses the upper bound.
    PhatResult result;
    result.exact = false;
    result.lower = c;
    result.upper = greedy.colors;
    result.witness = greedy.labeling;
    return result;
  }
}

namespace {

// Branch and bound over edge colorings. Edges are grouped by the BFS position
// of their later endpoint, so every prefix of the edge order spans a
// connected subgraph of the visited vertices.
struct PSearch {
  const Graph& g;
  Deadline& deadline;
  std::vector<int> edge_order;          // edge ids
  std::vector<int> color;               // per ordered edge index, 0 = unset
  std::vector<std::vector<std::pair<int, int>>> colored_adj;  // (nb, color)
  std::vector<char> on_path;
  std::vector<int> trail;               // vertices currently marked on_path
  int best;                              // strictly improving cap
  std::vector<int> best_colors_by_id;    // per edge id
  int lower_bound;

  PSearch(const Graph& graph, const VertexOrdering& ordering, int initial_best,
          Deadline& dl)
      : g(graph),
        deadline(dl),
        best(initial_best),
        lower_bound(0) {
    const int n = g.vertex_count();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[ordering.order[i]] = i;
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, int>> incoming;  // (earlier position, id)
      for (auto [nb, id] : g.incident(ordering.order[i]))
        if (position[nb] < i) incoming.emplace_back(position[nb], id);
      std::sort(incoming.begin(), incoming.end());
      for (auto [p, id] : incoming) {
        (void)p;
        edge_order.push_back(id);
      }
    }
    color.assign(edge_order.size(), 0);
    colored_adj.assign(n, {});
    on_path.assign(n, 0);
  }

  void mark(int v) {
    on_path[v] = 1;
    trail.push_back(v);
  }

  // True iff some fully colored simple path through (u, v) has parity zero.
  // A successful search returns through the recursion without unmarking, so
  // the trail is cleared here in one place.
  bool parity_path_through(int u, int v, std::uint64_t parity) {
    trail.clear();
    mark(u);
    mark(v);
    const bool found = left_dfs(u, v, parity);
    for (int x : trail) on_path[x] = 0;
    return found;
  }

  bool left_dfs(int x, int right_start, std::uint64_t parity) {
    if (right_dfs(right_start, parity)) return true;
    for (auto [nb, col] : colored_adj[x]) {
      if (on_path[nb]) continue;
      deadline.poll();
      mark(nb);
      if (left_dfs(nb, right_start, parity ^ (std::uint64_t{1} << (col - 1))))
        return true;
      on_path[nb] = 0;
      trail.pop_back();
    }
    return false;
  }

  bool right_dfs(int x, std::uint64_t parity) {
    if (parity == 0) return true;
    for (auto [nb, col] : colored_adj[x]) {
      if (on_path[nb]) continue;
      deadline.poll();
      mark(nb);
      if (right_dfs(nb, parity ^ (std::uint64_t{1} << (col - 1)))) return true;
      on_path[nb] = 0;
      trail.pop_back();
    }
    return false;
  }

  void record_best(int colors_used) {
    best = colors_used;
    best_colors_by_id.assign(color.size(), 0);
    for (std::size_t i = 0; i < edge_order.size(); ++i)
      best_colors_by_id[edge_order[i]] = color[i];
  }

  // Returns true when the search proved best == lower_bound (early stop).
  bool dfs(std::size_t ei, int max_used) {
    // best may have improved below an ancestor that already spent more
    // colors; such branches can no longer help.
    if (max_used >= best) return false;
    if (ei == edge_order.size()) {
      record_best(max_used);
      return best == lower_bound;
    }
    deadline.poll();
    const int id = edge_order[ei];
    const auto& [u, v] = g.edge(id);
    for (int col = 1; col <= std::min(max_used + 1, best - 1); ++col) {
      if (!parity_path_through(u, v, std::uint64_t{1} << (col - 1))) {
        color[ei] = col;
        colored_adj[u].emplace_back(v, col);
        colored_adj[v].emplace_back(u, col);
        const bool done = dfs(ei + 1, std::max(max_used, col));
        colored_adj[u].pop_back();
        colored_adj[v].pop_back();
        color[ei] = 0;
        if (done) return true;
      }
    }
    return false;
  }
};

}  // namespace

PResult exact_p(const Graph& g, const SolveBudget& budget) {
  if (!g.is_connected())
    throw std::invalid_argument("exact_p: graph must be connected");
  const int n = g.vertex_count();
  if (n == 1) return {true, 0, 0, 0, EdgeColoring(std::vector<int>{})};

  const GreedyUpper greedy = greedy_canonical(g);
  const int lb = std::max(ceil_lg(static_cast<std::uint64_t>(n)), g.max_degree());
  if (greedy.colors == lb)
    return {true, lb, lb, lb, greedy.coloring};
  if (greedy.colors > 64)
    throw BudgetError("exact_p: too many colors for the parity masks");

  const VertexOrdering ordering = bfs_ordering(g, 0);
  Deadline deadline(budget);
  PSearch search(g, ordering, greedy.colors, deadline);
  search.lower_bound = lb;
  bool interrupted = false;
  try {
    search.dfs(0, 0);
  } catch (const TimeUp&) {
    interrupted = true;
  }

  PResult result;
  result.lower = lb;
  result.upper = search.best;
  if (search.best_colors_by_id.empty()) {
    result.witness = greedy.coloring;  // never improved on the greedy spec
  } else {
    result.witness = EdgeColoring(search.best_colors_by_id);
  }
  result.exact = !interrupted;
  if (result.exact) result.value = search.best;
  return result;
}

std::optional<HypercubeEmbedding> hypercube_embedding(const Graph& g,
                                                      const SolveBudget& budget) {
  if (!g.is_connected())
    throw std::invalid_argument("hypercube_embedding: graph must be connected");
  const int n = g.vertex_count();
  const int k = ceil_lg(static_cast<std::uint64_t>(n));
  if (n == 1) return HypercubeEmbedding{0, {0}};

  const PhatResult phat = exact_phat(g, budget);
  if (!phat.exact)
    throw BudgetError("hypercube_embedding: spec-number search interrupted");
  if (phat.value != k) return std::nullopt;

  // The witness uses exactly k colors whose vectors must be independent, so
  // expressing each label over the color basis maps labels into F2^k with
  // edges changing exactly one coordinate.
  std::vector<std::uint64_t> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = phat.witness->labels[v].to_mask();
  std::map<std::uint64_t, int> color_set;
  for (const auto& [u, v] : g.edges()) color_set.emplace(labels[u] ^ labels[v], 0);
  if (static_cast<int>(color_set.size()) != k)
    throw std::logic_error("hypercube_embedding: witness color count mismatch");

  // Rows (reduced color, combination of original colors), kept fully reduced
  // so that a single elimination pass answers membership queries.
  const auto low_bit = [](std::uint64_t x) { return x & (~x + 1); };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  int index = 0;
  for (auto& [vec, idx] : color_set) {
    idx = index++;
    std::uint64_t reduced = vec, combo = std::uint64_t{1} << idx;
    for (auto& [rvec, rcombo] : rows) {
      if (reduced & low_bit(rvec)) {
        reduced ^= rvec;
        combo ^= rcombo;
      }
    }
    if (reduced == 0)
      throw std::logic_error("hypercube_embedding: colors not independent");
    for (auto& [rvec, rcombo] : rows) {
      if (rvec & low_bit(reduced)) {
        rvec ^= reduced;
        rcombo ^= combo;
      }
    }
    rows.emplace_back(reduced, combo);
  }

  HypercubeEmbedding embedding;
  embedding.dimension = k;
  embedding.coords.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    std::uint64_t rest = labels[v], combo = 0;
    for (auto& [rvec, rcombo] : rows) {
      if (rest & low_bit(rvec)) {
        rest ^= rvec;
        combo ^= rcombo;
      }
    }
    if (rest != 0)
      throw std::logic_error("hypercube_embedding: label outside color span");
    embedding.coords[v] = combo;
  }

  // Verify edge by edge and injectivity before returning.
  std::map<std::uint64_t, int> seen;
  for (int v = 0; v < n; ++v) {
    if (!seen.emplace(embedding.coords[v], v).second)
      throw std::logic_error("hypercube_embedding: embedding not injective");
  }
  for (const auto& [u, v] : g.edges()) {
    if (std::popcount(embedding.coords[u] ^ embedding.coords[v]) != 1)
      throw std::logic_error("hypercube_embedding: edge image not a hypercube edge");
  }
  return embedding;
}

bool havel_moravek_check(const Graph& g, const EdgeColoring& phi,
                         const PecBudget& pec_budget) {
  return is_pec(g, phi, pec_budget) && cycle_space_image_dim(g, phi) == 0;
}

}  // namespace pec
