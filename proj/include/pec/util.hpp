#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace pec {

// Thrown when a computation exceeds a configured size cap or time budget.
// Distinct from a negative verification result and from usage errors.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ceil(log2(n)) for n >= 1, in integer arithmetic (exact at powers of two).
inline int ceil_lg(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("ceil_lg: argument must be positive");
  return n == 1 ? 0 : std::bit_width(n - 1);
}

// floor(log2(n)) for n >= 1.
inline int floor_lg(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("floor_lg: argument must be positive");
  return std::bit_width(n) - 1;
}

}  // namespace pec
