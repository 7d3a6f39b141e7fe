#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "forge/exact.hpp"

namespace forge::families {

using exact::Integer;
using exact::Rational;

/// Fixed extra term on the right-hand side of a solution row. `value` is the
/// signed base-power itself (e.g. -9 for the n = 1 row of a (-9)^n family);
/// `sign` says whether value^exponent is added or subtracted.
struct Residual {
  int sign = 1;
  Rational value;

  friend bool operator==(const Residual&, const Residual&) = default;
};

/// One solution row of a power relation:
///   sum of entries[0..lhs_count)^exponent
///     = sum of entries[lhs_count..)^exponent + sign * value^exponent.
/// The relation is checked exactly at construction and a failure throws
/// InternalInconsistencyError.
class SolutionTuple {
 public:
  SolutionTuple(std::size_t index, std::vector<Rational> entries, std::size_t lhs_count,
                unsigned exponent, std::optional<Residual> residual);

  std::size_t index() const { return index_; }
  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t lhs_count() const { return lhs_count_; }
  unsigned exponent() const { return exponent_; }
  const std::optional<Residual>& residual() const { return residual_; }

  bool is_integral() const;

  friend bool operator==(const SolutionTuple&, const SolutionTuple&) = default;

 private:
  std::size_t index_;
  std::vector<Rational> entries_;
  std::size_t lhs_count_;
  unsigned exponent_;
  std::optional<Residual> residual_;
};

}  // namespace forge::families
