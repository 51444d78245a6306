#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pec/coloring.hpp"
#include "pec/gf2.hpp"
#include "pec/graph.hpp"

namespace pec {

// The ruler sequence <c>: c_i = 1 + (exponent of 2 in i), starting
// 1,2,1,3,1,2,1,4,... Its prefix of length 2^k - 1 is the palindromic block
// A_k = A_{k-1}, k, A_{k-1}.
struct RulerSequence {
  std::vector<int> entries;            // entries[i-1] = c_i
  int at(long long i) const { return entries.at(i - 1); }
};
RulerSequence ruler_sequence(long long m);

// Prefix sums s_0..s_m of the atoms e_{c_i}: the vectors visited by the
// binary reflected Gray code. Consecutive labels differ in coordinate c_i.
class GrayLabels {
 public:
  explicit GrayLabels(long long m);

  long long max_index() const { return static_cast<long long>(masks_.size()) - 1; }
  std::uint64_t mask_at(long long i) const { return masks_.at(i); }
  Gf2Vector at(long long i) const { return Gf2Vector::from_mask(masks_.at(i), width_); }
  int width() const { return width_; }

 private:
  std::vector<std::uint64_t> masks_;
  int width_ = 0;
};

struct GrayColoring {
  Graph graph;  // path_power(n, ell)
  Labeling labeling;
  EdgeColoring coloring;
  bool in_regime = false;  // ell <= ceil(lg n)
};

// Canonical coloring of path_power(n, ell) generated by labeling vertex v_i
// with the Gray label s_i. Always a spec; the color-count guarantees hold in
// the regime ell <= ceil(lg n), which in_regime records.
GrayColoring gray_coloring(int n, int ell);

// Number of distinct colors of gray_coloring(n, ell) whose largest coordinate
// is k, for each k. Each entry is at most min(ell, 2^(k-1)), with equality
// once n >= 2^(k-1) + ell. Requires the regime ell <= ceil(lg n).
std::map<int, int> color_census(int n, int ell);

// XOR of the atoms e_{c_{i+1}}..e_{c_j}: the color of the window (i, j]. The
// largest entry of a window appears exactly once, so it is always set.
Gf2Vector window_color(long long i, long long j);

struct TrimCheck {
  enum class Status { holds, fails, hypothesis_violation };
  Status status = Status::hypothesis_violation;
  long long match_index = -1;  // h with window sum == s_h, when holds
};

// Checks that a_{q+1} + ... + a_{m-r} lies among {s_0..s_m}, under the
// hypotheses r <= m/2 and r in {q, q+1} (violations get a distinct status).
// Membership is tested by direct comparison against the label list.
TrimCheck trim_check(long long q, long long r, long long m);

// Given a window (i, j] of length <= ell with largest entry k, finds the
// window of length <= ell ending at the first copy of k (position 2^(k-1))
// with the same color. Existence is guaranteed; found by direct scan.
std::pair<long long, long long> reduce_window_to_first_peak(long long i,
                                                            long long j,
                                                            int ell);

}  // namespace pec
