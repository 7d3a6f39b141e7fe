#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forge/exact.hpp"
#include "forge/identities.hpp"
#include "forge/solution.hpp"

namespace forge::oracle {

using exact::Integer;
using exact::Rational;

/// Pair (a, b) with a <= b whose cubes sum to the queried value.
using CubePair = std::pair<long, long>;

/// All pairs a <= b with a^3 + b^3 = N inside the bound (1 <= a, b <= bound,
/// or |a|, |b| <= bound with allow_negative), sorted by a. A cube table is
/// built once and the scan over a is split across `workers` threads
/// (0 = all available); the result does not depend on the worker count.
/// Bounds beyond the 64-bit cube range fall back to arbitrary precision.
std::vector<CubePair> two_cube_representations(const Integer& N, long bound, bool allow_negative,
                                               int workers = 0);

/// Smallest positive N expressible as a sum of two positive cubes within
/// `bound` in at least k ways. Certification requires N <= bound^3; throws
/// InsufficientBoundError otherwise (or when nothing qualifies).
Integer smallest_with_k_representations(unsigned k, long bound, int workers = 0);

/// Exact recomputation of a solution row's power relation, independent of
/// the family generation code.
bool verify_relation(const std::vector<Rational>& entries, std::size_t lhs_count,
                     unsigned exponent, const std::optional<families::Residual>& residual);
bool verify_relation(const families::SolutionTuple& t);

/// All positive quadruples p <= q <= r with p^3 + q^3 + r^3 = s^3 and every
/// entry <= bound, sorted by s then lexicographically.
std::vector<identities::CubicSeed> seed_search_three_cubes(long bound, int workers = 0);

/// Integer six-tuples (p,q,r,s,t,u) with |entries| <= bound satisfying
/// p^3+q^3+r^3+s^3+t^3 = u^3 together with the chord constraints p+s != 0,
/// q+t != 0, r-u != 0; meet-in-the-middle over triples, sorted
/// lexicographically.
std::vector<identities::FiveCubeSeed> seed_search_five_cubes(long bound, int workers = 0);

/// Slow, structurally different implementations kept for cross-checking the
/// kernels above.
namespace reference {

std::vector<CubePair> two_cube_representations(const Integer& N, long bound, bool allow_negative);
Integer smallest_with_k_representations(unsigned k, long bound);
std::vector<identities::CubicSeed> seed_search_three_cubes(long bound);
std::vector<identities::FiveCubeSeed> seed_search_five_cubes(long bound);

}  // namespace reference

/// One JSON line per query: {"n": "...", "pairs": [[a, b], ...]}.
std::string representations_to_json(const Integer& N, const std::vector<CubePair>& pairs);
std::pair<Integer, std::vector<CubePair>> representations_from_json(const std::string& line);

}  // namespace forge::oracle
