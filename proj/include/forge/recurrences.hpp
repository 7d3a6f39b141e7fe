#pragma once

#include <string>
#include <vector>

#include "forge/exact.hpp"
#include "forge/series.hpp"

namespace forge::recurrences {

using exact::Integer;
using series::Polynomial;
using series::RationalFunction;

/// Order-2 integer recurrence w_{n+2} = c1*w_{n+1} + c2*w_n with initial
/// values w0, w1. Statements mixing the order (e.g. "9w_n - 7w_{n+1}") are
/// converted to this normal form at construction sites.
struct LinearRecurrence2 {
  Integer c1;
  Integer c2;
  Integer w0;
  Integer w1;

  bool operator==(const LinearRecurrence2&) const = default;

  std::string to_json() const;
  static LinearRecurrence2 from_json(const std::string& text);
};

/// Exact w_n by iteration.
Integer term(const LinearRecurrence2& rec, std::size_t n);

/// w_0 .. w_n as one pass.
std::vector<Integer> terms(const LinearRecurrence2& rec, std::size_t n_max);

/// Casoratian w_{n+1}^2 - w_n * w_{n+2}; geometric with ratio -c2.
Integer casoratian(const LinearRecurrence2& rec, std::size_t n);

/// Ordinary generating function of w_n^2. The denominator is
/// (1 - L^2 x)(1 - M^2 x)(1 - LM x) for the characteristic roots L, M,
/// expanded through the symmetric functions of {L^2, M^2, LM}:
///   e1 = c1^2 + c2, e2 = -c2*(c1^2 + c2), e3 = -c2^3.
/// The numerator is recovered from the first three terms.
RationalFunction square_ogf(const LinearRecurrence2& rec);

/// Ordinary generating function of w_n * w_{n+1}; same denominator as
/// square_ogf, numerator from the first three cross terms.
RationalFunction cross_ogf(const LinearRecurrence2& rec);

}  // namespace forge::recurrences
