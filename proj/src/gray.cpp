#include "pec/gray.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "pec/util.hpp"

namespace pec {

namespace {

constexpr long long kMaxSequenceLength = 1LL << 28;

void check_length(long long m) {
  if (m > kMaxSequenceLength)
    throw BudgetError("gray: sequence length exceeds cap");
}

int ruler_entry(long long i) {  // c_i for i >= 1
  return std::countr_zero(static_cast<std::uint64_t>(i)) + 1;
}

}  // namespace

RulerSequence ruler_sequence(long long m) {
  if (m < 1) throw std::invalid_argument("ruler_sequence: length must be >= 1");
  check_length(m);
  RulerSequence seq;
  seq.entries.reserve(static_cast<std::size_t>(m));
  for (long long i = 1; i <= m; ++i) seq.entries.push_back(ruler_entry(i));
  return seq;
}

GrayLabels::GrayLabels(long long m) {
  if (m < 0) throw std::invalid_argument("GrayLabels: length must be >= 0");
  check_length(m);
  masks_.resize(static_cast<std::size_t>(m) + 1);
  masks_[0] = 0;
  for (long long i = 1; i <= m; ++i)
    masks_[i] = masks_[i - 1] ^ (std::uint64_t{1} << (ruler_entry(i) - 1));
  width_ = m >= 1 ? floor_lg(static_cast<std::uint64_t>(m)) + 1 : 0;
}

GrayColoring gray_coloring(int n, int ell) {
  Graph graph = path_power(n, ell);  // validates n, ell
  const GrayLabels labels(n - 1);
  GrayColoring out{std::move(graph), {}, {}, ell <= ceil_lg(static_cast<std::uint64_t>(n))};
  out.labeling.labels.reserve(n);
  for (int i = 0; i < n; ++i) out.labeling.labels.push_back(labels.at(i));
  out.coloring = canonical_from_labeling(out.graph, out.labeling);
  return out;
}

std::map<int, int> color_census(int n, int ell) {
  if (n < 2) throw std::invalid_argument("color_census: n must be >= 2");
  if (ell < 1 || ell > ceil_lg(static_cast<std::uint64_t>(n)))
    throw std::domain_error("color_census: need 1 <= ell <= ceil(lg n)");
  const GrayLabels labels(n - 1);
  std::set<std::uint64_t> distinct;
  for (int j = 1; j < n; ++j)
    for (int i = std::max(0, j - ell); i < j; ++i)
      distinct.insert(labels.mask_at(i) ^ labels.mask_at(j));
  std::map<int, int> census;
  for (std::uint64_t mask : distinct) ++census[std::bit_width(mask)];
  return census;
}

Gf2Vector window_color(long long i, long long j) {
  if (i < 0 || j <= i) throw std::invalid_argument("window_color: need 0 <= i < j");
  check_length(j);
  const int width = floor_lg(static_cast<std::uint64_t>(j)) + 1;
  Gf2Vector color(width);
  for (long long t = i + 1; t <= j; ++t) {
    const int coord = ruler_entry(t);
    color.set(coord, !color.test(coord));
  }
  return color;
}

TrimCheck trim_check(long long q, long long r, long long m) {
  if (q < 0 || r < 0 || m < 0)
    throw std::invalid_argument("trim_check: arguments must be nonnegative");
  check_length(m);
  TrimCheck out;
  if (2 * r > m || (r != q && r != q + 1) || q > m - r) {
    out.status = TrimCheck::Status::hypothesis_violation;
    return out;
  }
  std::uint64_t window = 0;
  for (long long t = q + 1; t <= m - r; ++t)
    window ^= std::uint64_t{1} << (ruler_entry(t) - 1);
  const GrayLabels labels(m);
  out.status = TrimCheck::Status::fails;
  for (long long h = 0; h <= m; ++h) {
    if (labels.mask_at(h) == window) {
      out.status = TrimCheck::Status::holds;
      out.match_index = h;
      break;
    }
  }
  return out;
}

std::pair<long long, long long> reduce_window_to_first_peak(long long i,
                                                            long long j,
                                                            int ell) {
  if (i < 0 || j <= i) throw std::invalid_argument("reduce_window: need 0 <= i < j");
  if (ell < 1 || j - i > ell)
    throw std::invalid_argument("reduce_window: window longer than ell");
  check_length(j);

  int peak = 0;
  for (long long t = i + 1; t <= j; ++t) peak = std::max(peak, ruler_entry(t));
  const long long target_end = 1LL << (peak - 1);

  // Prefix masks up to max(j, target_end); window (a, b] = prefix[b]^prefix[a].
  const long long top = std::max(j, target_end);
  std::vector<std::uint64_t> prefix(static_cast<std::size_t>(top) + 1, 0);
  for (long long t = 1; t <= top; ++t)
    prefix[t] = prefix[t - 1] ^ (std::uint64_t{1} << (ruler_entry(t) - 1));

  const std::uint64_t want = prefix[j] ^ prefix[i];
  for (long long start = std::max<long long>(0, target_end - ell);
       start < target_end; ++start) {
    if ((prefix[target_end] ^ prefix[start]) == want)
      return {start, target_end};
  }
  throw std::logic_error("reduce_window: no equal-color window at the first peak");
}

}  // namespace pec
