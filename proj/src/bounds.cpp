#include "pec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pec/util.hpp"

namespace pec {

int hopf_stiefel(int s, int t) {
  if (s < 1 || t < 1)
    throw std::invalid_argument("hopf_stiefel: arguments must be >= 1");
  long long best = std::numeric_limits<long long>::max();
  const int max_j = ceil_lg(static_cast<std::uint64_t>(s) + t);
  for (int j = 0; j <= max_j; ++j) {
    const long long p = 1LL << j;
    const long long term = p * ((s + p - 1) / p + (t + p - 1) / p - 1);
    best = std::min(best, term);
  }
  return static_cast<int>(best);
}

int hopf_stiefel_binomial(int s, int t) {
  if (s < 1 || t < 1)
    throw std::invalid_argument("hopf_stiefel_binomial: arguments must be >= 1");
  if (s + t > 10'000)
    throw BudgetError("hopf_stiefel_binomial: s + t exceeds guard");
  for (int n = std::max(s, t);; ++n) {
    bool ok = true;
    for (int k = std::max(n - t + 1, 0); k < s && ok; ++k) {
      if ((k & (n - k)) == 0) ok = false;  // binom(n, k) odd
    }
    if (ok) return n;  // reached at n = s + t - 1 at the latest
  }
}

double sr_bound(const Graph& g, const EdgeColoring& phi, int root) {
  const Canonicalization canon = canonicalize(g, phi, root);
  if (!canon.spec) throw std::invalid_argument("sr_bound: coloring is not a spec");
  return std::log2(static_cast<double>(g.vertex_count())) +
         canon.cycle_space.dim();
}

namespace {

constexpr long long kInfeasible = std::numeric_limits<long long>::max() / 4;

void check_hypothesis(const SaturatingInstance& instance) {
  for (std::size_t i = 1; i < instance.back_degrees.size(); ++i) {
    if (instance.back_degrees[i] < 1)
      throw std::invalid_argument(
          "saturating_min_sum: a vertex after the first has no earlier neighbor");
  }
}

bool prefix_feasible(std::uint32_t mask, const std::vector<int>& bd) {
  const int n = static_cast<int>(bd.size());
  int count = 0;
  for (int k = 2; k <= n; ++k) {
    if (mask & (1u << (k - 2))) ++count;
    if (count < ceil_lg(static_cast<std::uint64_t>(k))) return false;
  }
  return true;
}

}  // namespace

SaturatingResult saturating_min_sum(const SaturatingInstance& instance) {
  check_hypothesis(instance);
  const int n = static_cast<int>(instance.back_degrees.size());
  if (n == 0) throw std::invalid_argument("saturating_min_sum: empty instance");
  const int target = ceil_lg(static_cast<std::uint64_t>(n));
  if (target == 0) return {0, {}};

  // dp[k][c] = cheapest way to pick c of positions 2..k meeting every prefix
  // threshold so far. Every pick costs >= 1, so some optimal saturating set
  // has size exactly ceil(lg n): dropping a member after the last tight
  // prefix never breaks feasibility and never raises the sum. Counts are
  // capped accordingly.
  std::vector<std::vector<long long>> dp(
      n + 1, std::vector<long long>(target + 1, kInfeasible));
  dp[1][0] = 0;
  for (int k = 2; k <= n; ++k) {
    const int d = instance.back_degrees[k - 1];
    const int need = ceil_lg(static_cast<std::uint64_t>(k));
    for (int c = need; c <= std::min(target, k - 1); ++c) {
      long long best = dp[k - 1][c];
      if (c >= 1 && dp[k - 1][c - 1] < kInfeasible)
        best = std::min(best, dp[k - 1][c - 1] + d);
      dp[k][c] = best;
    }
  }
  if (dp[n][target] >= kInfeasible)
    throw std::logic_error("saturating_min_sum: no feasible set");

  SaturatingResult result;
  result.value = dp[n][target];
  int c = target;
  for (int k = n; k >= 2; --k) {
    if (c >= 1 && dp[k - 1][c - 1] < kInfeasible &&
        dp[k][c] == dp[k - 1][c - 1] + instance.back_degrees[k - 1]) {
      result.chosen.push_back(k - 1);
      --c;
    }
  }
  std::reverse(result.chosen.begin(), result.chosen.end());
  return result;
}

SaturatingResult saturating_min_sum_exhaustive(const SaturatingInstance& instance) {
  check_hypothesis(instance);
  const int n = static_cast<int>(instance.back_degrees.size());
  if (n == 0)
    throw std::invalid_argument("saturating_min_sum_exhaustive: empty instance");
  if (n > 18)
    throw std::invalid_argument("saturating_min_sum_exhaustive: n exceeds 18");
  if (n == 1) return {0, {}};

  long long best = kInfeasible;
  std::uint32_t best_mask = 0;
  const std::uint32_t limit = 1u << (n - 1);  // subsets of positions 2..n
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!prefix_feasible(mask, instance.back_degrees)) continue;
    long long sum = 0;
    for (int k = 2; k <= n; ++k)
      if (mask & (1u << (k - 2))) sum += instance.back_degrees[k - 1];
    if (sum < best) {
      best = sum;
      best_mask = mask;
    }
  }
  if (best >= kInfeasible)
    throw std::logic_error("saturating_min_sum_exhaustive: no feasible set");
  SaturatingResult result;
  result.value = best;
  for (int k = 2; k <= n; ++k)
    if (best_mask & (1u << (k - 2))) result.chosen.push_back(k - 1);
  return result;
}

PathPowerBounds path_power_bounds(int n, int ell) {
  if (n < 2) throw std::invalid_argument("path_power_bounds: n must be >= 2");
  if (ell < 1 || ell > ceil_lg(static_cast<std::uint64_t>(n)))
    throw std::invalid_argument("path_power_bounds: need 1 <= ell <= ceil(lg n)");
  const long long l = ell;
  const long long k = ceil_lg(static_cast<std::uint64_t>(n));
  PathPowerBounds out;
  out.lower = l * k - l * (l + 1) / 2;
  out.upper = l * k - l * (floor_lg(static_cast<std::uint64_t>(ell)) - 1);
  return out;
}

long long hub_family_lower_bound(int k) {
  const HubFamilyGraph family = hub_family_graph(k);
  std::vector<int> identity(family.graph.vertex_count());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  const VertexOrdering ordering = make_ordering(family.graph, identity);
  return saturating_min_sum({ordering.back_degrees}).value;
}

}  // namespace pec
