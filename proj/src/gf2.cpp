#include "pec/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pec/util.hpp"

namespace pec {

namespace {
constexpr std::size_t words_for(int width) {
  return (static_cast<std::size_t>(width) + 63) / 64;
}
}  // namespace

Gf2Vector::Gf2Vector(int width) : width_(width) {
  if (width < 0) throw std::invalid_argument("Gf2Vector: negative width");
  words_.assign(words_for(width), 0);
}

Gf2Vector Gf2Vector::atom(int coord, int width) {
  Gf2Vector v(width);
  v.set(coord);
  return v;
}

Gf2Vector Gf2Vector::from_mask(std::uint64_t mask, int width) {
  Gf2Vector v(width);
  if (mask != 0) {
    if (static_cast<int>(std::bit_width(mask)) > width)
      throw std::invalid_argument("Gf2Vector: mask exceeds width");
    v.words_[0] = mask;
  }
  return v;
}

Gf2Vector Gf2Vector::from_hex(const std::string& hex, int width) {
  Gf2Vector v(width);
  if (hex.empty()) throw std::invalid_argument("Gf2Vector: empty hex string");
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[hex.size() - 1 - i];
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else throw std::invalid_argument("Gf2Vector: bad hex digit");
    for (int b = 0; b < 4; ++b) {
      if (digit & (1 << b)) v.set(static_cast<int>(4 * i) + b + 1);
    }
  }
  return v;
}

bool Gf2Vector::test(int coord) const {
  if (coord < 1 || coord > width_) return false;
  const int idx = coord - 1;
  return (words_[idx / 64] >> (idx % 64)) & 1;
}

void Gf2Vector::set(int coord, bool value) {
  if (coord < 1 || coord > width_)
    throw std::invalid_argument("Gf2Vector: coordinate outside width");
  const int idx = coord - 1;
  const std::uint64_t bit = std::uint64_t{1} << (idx % 64);
  if (value)
    words_[idx / 64] |= bit;
  else
    words_[idx / 64] &= ~bit;
}

bool Gf2Vector::is_zero() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

int Gf2Vector::weight() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

int Gf2Vector::lowest_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0)
      return static_cast<int>(64 * i) + std::countr_zero(words_[i]) + 1;
  }
  return 0;
}

int Gf2Vector::highest_set() const {
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != 0)
      return static_cast<int>(64 * i) + std::bit_width(words_[i]);
  }
  return 0;
}

std::uint64_t Gf2Vector::to_mask() const {
  if (highest_set() > 64)
    throw std::invalid_argument("Gf2Vector: support does not fit in 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::string Gf2Vector::to_hex() const {
  std::string out;
  bool leading = true;
  for (std::size_t i = words_.size(); i-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const unsigned digit = static_cast<unsigned>((words_[i] >> (4 * nib)) & 0xf);
      if (leading && digit == 0) continue;
      leading = false;
      out.push_back("0123456789abcdef"[digit]);
    }
  }
  return leading ? std::string("0") : out;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& rhs) {
  if (rhs.width_ > width_) {
    width_ = rhs.width_;
    words_.resize(words_for(width_), 0);
  }
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  return *this;
}

bool operator==(const Gf2Vector& a, const Gf2Vector& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.word(i) != b.word(i)) return false;
  return true;
}

bool operator<(const Gf2Vector& a, const Gf2Vector& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = n; i-- > 0;) {
    if (a.word(i) != b.word(i)) return a.word(i) < b.word(i);
  }
  return false;
}

bool Gf2Basis::insert(const Gf2Vector& v) {
  Gf2Vector red = reduce(v);
  if (red.is_zero()) return false;
  const int lead = red.lowest_set();
  // Clear the new leading coordinate from existing rows, then place the row
  // so that leading coordinates stay increasing.
  for (Gf2Vector& row : rows_) {
    if (row.test(lead)) row ^= red;
  }
  auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const Gf2Vector& r) {
    return r.lowest_set() > lead;
  });
  rows_.insert(pos, std::move(red));
  return true;
}

Gf2Vector Gf2Basis::reduce(Gf2Vector v) const {
  for (const Gf2Vector& row : rows_) {
    if (v.test(row.lowest_set())) v ^= row;
  }
  return v;
}

namespace {

// Colex successor of an ascending combination drawn from {1..maxval}.
bool next_colex(std::vector<int>& comb, int maxval) {
  const int k = static_cast<int>(comb.size());
  for (int p = 0; p < k; ++p) {
    const int limit = (p + 1 < k) ? comb[p + 1] - 1 : maxval;
    if (comb[p] < limit) {
      ++comb[p];
      for (int q = 0; q < p; ++q) comb[q] = q + 1;
      return true;
    }
  }
  return false;
}

double binomial_approx(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Gf2Vector> masks_to_vectors(const std::vector<std::uint64_t>& masks,
                                        int dim) {
  std::vector<Gf2Vector> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(Gf2Vector::from_mask(m, dim));
  return out;
}

}  // namespace

SumsetResult min_sumset(int s, int t, int dim, double pair_budget) {
  if (s < 1 || t < 1) throw std::invalid_argument("min_sumset: sizes must be >= 1");
  if (dim < 0 || dim > 30) throw std::invalid_argument("min_sumset: bad dimension");
  const std::int64_t space = std::int64_t{1} << dim;
  if (space < std::max(s, t))
    throw std::domain_error("min_sumset: 2^dim is too small for the set sizes");

  const int maxval = static_cast<int>(space) - 1;  // nonzero masks
  const double pairs =
      binomial_approx(maxval, s - 1) * binomial_approx(maxval, t - 1);
  if (pairs > pair_budget)
    throw BudgetError("min_sumset: search space exceeds configured budget");

  std::vector<int> stamp(static_cast<std::size_t>(space), -1);
  int generation = 0;

  std::vector<std::uint64_t> a(static_cast<std::size_t>(s)),
      b(static_cast<std::size_t>(t));
  long long best = space + 1;
  std::vector<std::uint64_t> best_a, best_b;

  std::vector<int> comb_a(static_cast<std::size_t>(s - 1));
  for (int i = 0; i < s - 1; ++i) comb_a[i] = i + 1;
  bool more_a = true;
  while (more_a) {
    a[0] = 0;
    for (int i = 0; i < s - 1; ++i) a[static_cast<std::size_t>(i) + 1] = comb_a[i];

    std::vector<int> comb_b(static_cast<std::size_t>(t - 1));
    for (int i = 0; i < t - 1; ++i) comb_b[i] = i + 1;
    bool more_b = true;
    while (more_b) {
      b[0] = 0;
      for (int i = 0; i < t - 1; ++i) b[static_cast<std::size_t>(i) + 1] = comb_b[i];

      ++generation;
      long long count = 0;
      for (int i = 0; i < s && count < best; ++i) {
        for (int j = 0; j < t; ++j) {
          const std::uint64_t sum = a[i] ^ b[j];
          if (stamp[sum] != generation) {
            stamp[sum] = generation;
            if (++count >= best) break;
          }
        }
      }
      if (count < best) {
        best = count;
        best_a = a;
        best_b = b;
      }
      more_b = next_colex(comb_b, maxval);
    }
    more_a = next_colex(comb_a, maxval);
  }

  SumsetResult result;
  result.size = best;
  result.set_a = masks_to_vectors(best_a, dim);
  result.set_b = masks_to_vectors(best_b, dim);
  return result;
}

}  // namespace pec
