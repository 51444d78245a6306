#pragma once

#include <utility>
#include <vector>

#include "pec/coloring.hpp"
#include "pec/graph.hpp"

namespace pec {

// Hopf-Stiefel function s o t via the closed formula
// min_j 2^j (ceil(s/2^j) + ceil(t/2^j) - 1); j beyond ceil(lg(s+t)) cannot
// improve the j = 0 term.
int hopf_stiefel(int s, int t);

// Independent route: least n such that binom(n, k) is even for all k with
// n - t < k < s. Parity of binomials by the carry-free test
// (k & (n - k)) == 0. Guarded at s + t <= 10^4.
int hopf_stiefel_binomial(int s, int t);

// lg n + dim C_phi, a lower bound on the number of colors of any spec that
// the given spec refines. Throws when phi is not a spec.
double sr_bound(const Graph& g, const EdgeColoring& phi, int root);

// Back-degrees of a vertex ordering, position i (0-based) holding the
// back-degree of the (i+1)-th vertex. A subset T of positions >= 1 is
// saturating when |T intersect {positions 1..k-1}| >= ceil(lg k) for every
// prefix length k; thresholds are evaluated in integer arithmetic.
struct SaturatingInstance {
  std::vector<int> back_degrees;
};

struct SaturatingResult {
  long long value = 0;
  std::vector<int> chosen;  // 0-based positions into the ordering
};

// Exact minimum of the back-degree sum over saturating subsets, by a dynamic
// program over (position, chosen-count). Requires back_degrees[i] >= 1 for
// i >= 1 (every vertex after the first has an earlier neighbor). The value
// lower-bounds the spec number of the graph the ordering came from.
SaturatingResult saturating_min_sum(const SaturatingInstance& instance);

// Exponential subset-enumeration oracle for cross-checks; n <= 18.
SaturatingResult saturating_min_sum_exhaustive(const SaturatingInstance& instance);

// Strict bounds bracketing the spec number of path_power(n, ell) for
// 1 <= ell <= ceil(lg n):
//   lower = ell*ceil(lg n) - binom(ell+1, 2)   (value is strictly above)
//   upper = ell*ceil(lg n) - ell*(floor(lg ell) - 1)  (strictly below)
struct PathPowerBounds {
  long long lower = 0;
  long long upper = 0;
};
PathPowerBounds path_power_bounds(int n, int ell);

// Exact saturating minimum for hub_family_graph(k) under its natural vertex
// order; a certified lower bound on the spec number of that graph.
long long hub_family_lower_bound(int k);

}  // namespace pec
