#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pec {

// Element of the binary vector space U: 0/1 coordinates indexed from 1, with
// finite support. The width is the ambient dimension, fixed at construction;
// setting a coordinate beyond the width is an error, never a silent
// truncation. Addition is coordinatewise XOR, so v + v = 0.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(int width);

  static Gf2Vector atom(int coord, int width);  // e_coord, weight 1
  static Gf2Vector from_mask(std::uint64_t mask, int width);
  static Gf2Vector from_hex(const std::string& hex, int width);

  int width() const { return width_; }
  bool test(int coord) const;  // coordinates are 1-based
  void set(int coord, bool value = true);
  bool is_zero() const;
  int weight() const;
  int lowest_set() const;   // lowest coordinate with a 1; 0 when zero
  int highest_set() const;  // highest coordinate with a 1; 0 when zero

  // Support bitmask with coordinate 1 in the least significant bit.
  std::uint64_t to_mask() const;  // requires highest_set() <= 64
  std::string to_hex() const;    // lowercase, no leading zeros, "0" when zero

  Gf2Vector& operator^=(const Gf2Vector& rhs);

  friend Gf2Vector operator+(Gf2Vector lhs, const Gf2Vector& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  // Equality and ordering compare support only; width is storage capacity.
  friend bool operator==(const Gf2Vector& a, const Gf2Vector& b);
  friend bool operator<(const Gf2Vector& a, const Gf2Vector& b);
  friend bool operator!=(const Gf2Vector& a, const Gf2Vector& b) {
    return !(a == b);
  }

 private:
  std::uint64_t word(std::size_t i) const {
    return i < words_.size() ? words_[i] : 0;
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

inline Gf2Vector vec_add(const Gf2Vector& a, const Gf2Vector& b) {
  return a + b;
}

// Basis kept in reduced row-echelon form: rows have strictly increasing
// leading (lowest set) coordinates and each leading coordinate is zero in all
// other rows. This makes reduce() produce the unique representative of a
// coset that vanishes on every leading coordinate, so reduce is idempotent
// and linear.
class Gf2Basis {
 public:
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Gf2Vector>& rows() const { return rows_; }

  // Grows the span by v. Returns true iff v was independent of the span.
  bool insert(const Gf2Vector& v);

  // Canonical representative of the coset v + span.
  Gf2Vector reduce(Gf2Vector v) const;

  bool contains(const Gf2Vector& v) const { return reduce(v).is_zero(); }

 private:
  std::vector<Gf2Vector> rows_;
};

struct SumsetResult {
  long long size = 0;
  std::vector<Gf2Vector> set_a;
  std::vector<Gf2Vector> set_b;
};

// Minimum of |A+B| over subsets A,B of F2^dim with |A| = s and |B| = t,
// together with witness sets. Exhaustive search; 0 is forced into both sets
// (sumset size is translation invariant) and candidate sets are enumerated
// in colex order, so the initial counting segments seed the incumbent.
// Throws std::domain_error when 2^dim < max(s,t) and BudgetError when the
// number of candidate pairs exceeds pair_budget.
SumsetResult min_sumset(int s, int t, int dim, double pair_budget = 2e8);

}  // namespace pec
