#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/recurrences.hpp"
#include "forge/series.hpp"
#include "forge/solution.hpp"

namespace forge::families {

using recurrences::LinearRecurrence2;
using series::RationalFunction;

enum class Direction { taylor, laurent };

/// Quadratic substitution u*A^2 + v*A*B + w*B^2 with A = w_{n+1}, B = w_n;
/// the recurrence route to the same integers the generating function yields.
struct QuadSub {
  long u = 0;
  long v = 0;
  long w = 0;
};

/// Residual term sign * (scale * base^(n + index_offset))^exponent. The
/// taylor families use index_offset 0; the shifted laurent families use 1.
struct ResidualSpec {
  int sign = 1;
  Rational scale;
  Rational base;
  unsigned index_offset = 0;
  std::optional<QuadSub> substitution;  // set when the residual is itself a form value
};

/// One named family: generating functions over a shared denominator,
/// the side split, the residual convention, and the recurrence substitution
/// used as an independent route in tests.
struct FamilySpec {
  std::string name;
  unsigned exponent = 3;
  Direction direction = Direction::taylor;
  std::vector<RationalFunction> generators;
  std::size_t lhs_count = 2;
  std::optional<ResidualSpec> residual;
  LinearRecurrence2 recurrence;
  std::vector<QuadSub> substitutions;  // one per generator (taylor specs)
};

/// The 8 taylor specs plus the 3 laurent specs.
const std::vector<FamilySpec>& builtin_families();

/// Lookup by name; throws UnknownFamilyError whose message lists all names.
const FamilySpec& family_by_name(const std::string& name);

Rational residual_value(const ResidualSpec& spec, std::size_t n);

/// Rows n = 0..n_max of a taylor-direction family. Every row is verified
/// exactly and must be integral.
std::vector<SolutionTuple> generate(const FamilySpec& spec, std::size_t n_max);

/// Rows of a laurent-direction family; entries are rationals.
std::vector<SolutionTuple> generate_laurent(const FamilySpec& spec, std::size_t n_max);

/// Scales the whole row (entries and residual) by the smallest power of
/// `base` that makes every value integral; re-verified after scaling.
/// Throws NotClearableError when no power up to base^64 suffices.
SolutionTuple clear_denominators(const SolutionTuple& t, const Integer& base);

/// True iff d_n = -a_{n+1} holds in the four-sequence cubic family for all
/// n <= n_max.
bool check_shift_remark(std::size_t n_max);

/// Serialization used by the CLI: CSV with header (n, entries..., residual)
/// and a JSON array that parses back into equal tuples.
std::string tuples_to_csv(const std::vector<SolutionTuple>& tuples);
std::string tuples_to_json(const std::vector<SolutionTuple>& tuples);
std::vector<SolutionTuple> tuples_from_json(const std::string& text);

/// Human-readable equation, e.g. "108^3 + 111^3 = 138^3 + (-9)^3".
std::string to_equation(const SolutionTuple& t);

}  // namespace forge::families
