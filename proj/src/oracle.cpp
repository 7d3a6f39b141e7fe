#include "forge/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace forge::oracle {

using exact::pow_integer;
using identities::CubicSeed;
using identities::FiveCubeSeed;
using json = nlohmann::json;

namespace {

// Largest bound whose worst-case pair sum 2*bound^3 still fits in 64 bits;
// beyond it the arbitrary-precision path takes over.
constexpr long kFastBound = 1'600'000;

int resolve_workers(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

__int128 cube128(long long v) { return static_cast<__int128>(v) * v * v; }

// Truncated-toward-zero integer cube root.
long long icbrt(long long t) {
  if (t < 0) return -icbrt(-t);
  long long x = static_cast<long long>(std::llround(std::cbrt(static_cast<double>(t))));
  if (x < 0) x = 0;
  while (x > 0 && cube128(x) > t) --x;
  while (cube128(x + 1) <= t) ++x;
  return x;
}

// Largest a with a^3 <= t (differs from icbrt for negative t).
long long icbrt_floor(long long t) {
  long long x = icbrt(t);
  while (cube128(x) > t) --x;
  while (cube128(x + 1) <= t) ++x;
  return x;
}

Integer integer_cbrt_floor(const Integer& t) {
  Integer r;
  mpz_root(r.get_mpz_t(), t.get_mpz_t(), 3);
  while (r * r * r > t) r -= 1;
  while ((r + 1) * (r + 1) * (r + 1) <= t) r += 1;
  return r;
}

std::vector<CubePair> representations_big(const Integer& N, long bound, bool allow_negative) {
  const long lo = allow_negative ? -bound : 1;
  Integer half;
  mpz_fdiv_q_2exp(half.get_mpz_t(), N.get_mpz_t(), 1);
  Integer amax_z = integer_cbrt_floor(half);
  if (amax_z > bound) amax_z = bound;
  if (amax_z < lo) return {};
  std::vector<CubePair> out;
  for (long a = lo; a <= amax_z.get_si(); ++a) {
    Integer target = N - pow_integer(Integer(a), 3);
    Integer b;
    int exact = mpz_root(b.get_mpz_t(), target.get_mpz_t(), 3);
    if (!exact) continue;
    if (b < a || b > bound || (!allow_negative && b < 1)) continue;
    out.emplace_back(a, b.get_si());
  }
  return out;
}

}  // namespace

std::vector<CubePair> two_cube_representations(const Integer& N, long bound, bool allow_negative,
                                               int workers) {
  if (bound < 1) throw Error("two_cube_representations needs bound >= 1");
  if (bound > kFastBound) return representations_big(N, bound, allow_negative);

  Integer cap = 2 * pow_integer(Integer(bound), 3);
  if (N > cap || N < -cap) return {};
  const long long n = static_cast<long long>(N.get_si());

  const long lo = allow_negative ? -bound : 1;
  const long long half = n >= 0 ? n / 2 : (n - 1) / 2;
  const long a_max = static_cast<long>(std::min<long long>(bound, icbrt_floor(half)));
  if (a_max < lo) return {};

  std::unordered_map<long long, long> cubes;
  cubes.reserve(static_cast<std::size_t>(bound - lo) + 1);
  for (long b = lo; b <= bound; ++b) cubes.emplace(static_cast<long long>(b) * b * b, b);

  const int nw = resolve_workers(workers);
  std::vector<std::vector<CubePair>> parts(static_cast<std::size_t>(nw));
#ifdef _OPENMP
#pragma omp parallel num_threads(nw)
  {
    auto& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long a = lo; a <= a_max; ++a) {
      auto it = cubes.find(n - static_cast<long long>(a) * a * a);
      if (it != cubes.end() && it->second >= a) local.emplace_back(a, it->second);
    }
  }
#else
  for (long a = lo; a <= a_max; ++a) {
    auto it = cubes.find(n - static_cast<long long>(a) * a * a);
    if (it != cubes.end() && it->second >= a) parts[0].emplace_back(a, it->second);
  }
#endif

  std::vector<CubePair> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

Integer smallest_with_k_representations(unsigned k, long bound, int workers) {
  if (k < 1) throw Error("smallest_with_k_representations needs k >= 1");
  if (bound < 1) throw Error("smallest_with_k_representations needs bound >= 1");
  constexpr long kDenseCap = 5000;
  if (bound > kDenseCap)
    throw Error("dense pair enumeration is capped at bound " + std::to_string(kDenseCap));

  const std::size_t total = static_cast<std::size_t>(bound) * (bound + 1) / 2;
  std::vector<long long> sums(total);
  auto offset = [bound](long a) {
    return static_cast<std::size_t>(a - 1) * (bound + 1) - static_cast<std::size_t>(a) * (a - 1) / 2;
  };

  const int nw = resolve_workers(workers);
#ifdef _OPENMP
#pragma omp parallel for num_threads(nw) schedule(static)
#endif
  for (long a = 1; a <= bound; ++a) {
    std::size_t at = offset(a);
    const long long a3 = static_cast<long long>(a) * a * a;
    for (long b = a; b <= bound; ++b) sums[at++] = a3 + static_cast<long long>(b) * b * b;
  }

  std::sort(sums.begin(), sums.end());

  const Integer certifiable = pow_integer(Integer(bound), 3);
  for (std::size_t i = 0; i < sums.size();) {
    std::size_t j = i;
    while (j < sums.size() && sums[j] == sums[i]) ++j;
    if (j - i >= k) {
      Integer found(static_cast<long>(sums[i]));
      if (found <= certifiable) return found;
      break;  // candidates beyond bound^3 may miss representations
    }
    i = j;
  }
  throw InsufficientBoundError("bound " + std::to_string(bound) + " cannot certify a value with " +
                               std::to_string(k) + " representations");
}

bool verify_relation(const std::vector<Rational>& entries, std::size_t lhs_count,
                     unsigned exponent, const std::optional<families::Residual>& residual) {
  auto power = [exponent](const Rational& x) {
    Rational r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= x;
    return r;
  };
  Rational left(0), right(0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i < lhs_count)
      left += power(entries[i]);
    else
      right += power(entries[i]);
  }
  if (residual) {
    Rational rp = power(residual->value);
    right += residual->sign < 0 ? -rp : rp;
  }
  return left == right;
}

bool verify_relation(const families::SolutionTuple& t) {
  return verify_relation(t.entries(), t.lhs_count(), t.exponent(), t.residual());
}

namespace {

struct RawSeed4 {
  long p, q, r, s;
  friend auto operator<=>(const RawSeed4&, const RawSeed4&) = default;
};

std::vector<CubicSeed> to_cubic_seeds(std::vector<RawSeed4> raw) {
  std::sort(raw.begin(), raw.end(), [](const RawSeed4& a, const RawSeed4& b) {
    return std::array{a.s, a.p, a.q, a.r} < std::array{b.s, b.p, b.q, b.r};
  });
  std::vector<CubicSeed> out;
  out.reserve(raw.size());
  for (const RawSeed4& x : raw) out.emplace_back(x.p, x.q, x.r, x.s);
  return out;
}

struct RawSeed6 {
  long p, q, r, s, t, u;
  friend auto operator<=>(const RawSeed6&, const RawSeed6&) = default;
};

std::vector<FiveCubeSeed> to_five_seeds(std::vector<RawSeed6> raw) {
  std::sort(raw.begin(), raw.end());
  std::vector<FiveCubeSeed> out;
  out.reserve(raw.size());
  for (const RawSeed6& x : raw) out.emplace_back(x.p, x.q, x.r, x.s, x.t, x.u);
  return out;
}

}  // namespace

std::vector<CubicSeed> seed_search_three_cubes(long bound, int workers) {
  if (bound < 1) throw Error("seed_search_three_cubes needs bound >= 1");

  std::unordered_multimap<long long, std::pair<long, long>> pair_sums;
  pair_sums.reserve(static_cast<std::size_t>(bound) * (bound + 1) / 2);
  for (long p = 1; p <= bound; ++p)
    for (long q = p; q <= bound; ++q)
      pair_sums.emplace(static_cast<long long>(p) * p * p + static_cast<long long>(q) * q * q,
                        std::make_pair(p, q));

  const int nw = resolve_workers(workers);
  std::vector<std::vector<RawSeed4>> parts(static_cast<std::size_t>(nw));
#ifdef _OPENMP
#pragma omp parallel num_threads(nw)
  {
    auto& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long s = 2; s <= bound; ++s) {
      for (long r = 1; r < s; ++r) {
        const long long target =
            static_cast<long long>(s) * s * s - static_cast<long long>(r) * r * r;
        auto [lo, hi] = pair_sums.equal_range(target);
        for (auto it = lo; it != hi; ++it)
          if (it->second.second <= r) local.push_back({it->second.first, it->second.second, r, s});
      }
    }
  }
#else
  for (long s = 2; s <= bound; ++s)
    for (long r = 1; r < s; ++r) {
      const long long target =
          static_cast<long long>(s) * s * s - static_cast<long long>(r) * r * r;
      auto [lo, hi] = pair_sums.equal_range(target);
      for (auto it = lo; it != hi; ++it)
        if (it->second.second <= r) parts[0].push_back({it->second.first, it->second.second, r, s});
    }
#endif

  std::vector<RawSeed4> raw;
  for (auto& p : parts) raw.insert(raw.end(), p.begin(), p.end());
  return to_cubic_seeds(std::move(raw));
}

std::vector<FiveCubeSeed> seed_search_five_cubes(long bound, int workers) {
  if (bound < 1) throw Error("seed_search_five_cubes needs bound >= 1");

  std::unordered_multimap<long long, std::array<long, 3>> rhs;
  const std::size_t side = static_cast<std::size_t>(2 * bound + 1);
  rhs.reserve(side * side * side);
  for (long s = -bound; s <= bound; ++s)
    for (long t = -bound; t <= bound; ++t)
      for (long u = -bound; u <= bound; ++u)
        rhs.emplace(static_cast<long long>(u) * u * u - static_cast<long long>(s) * s * s -
                        static_cast<long long>(t) * t * t,
                    std::array{s, t, u});

  const int nw = resolve_workers(workers);
  std::vector<std::vector<RawSeed6>> parts(static_cast<std::size_t>(nw));
#ifdef _OPENMP
#pragma omp parallel num_threads(nw)
  {
    auto& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long p = -bound; p <= bound; ++p) {
      for (long q = -bound; q <= bound; ++q)
        for (long r = -bound; r <= bound; ++r) {
          const long long key = static_cast<long long>(p) * p * p +
                                static_cast<long long>(q) * q * q +
                                static_cast<long long>(r) * r * r;
          auto [lo, hi] = rhs.equal_range(key);
          for (auto it = lo; it != hi; ++it) {
            const auto& [s, t, u] = it->second;
            if (p + s != 0 && q + t != 0 && r != u) local.push_back({p, q, r, s, t, u});
          }
        }
    }
  }
#else
  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q)
      for (long r = -bound; r <= bound; ++r) {
        const long long key = static_cast<long long>(p) * p * p +
                              static_cast<long long>(q) * q * q +
                              static_cast<long long>(r) * r * r;
        auto [lo, hi] = rhs.equal_range(key);
        for (auto it = lo; it != hi; ++it) {
          const auto& [s, t, u] = it->second;
          if (p + s != 0 && q + t != 0 && r != u) parts[0].push_back({p, q, r, s, t, u});
        }
      }
#endif

  std::vector<RawSeed6> raw;
  for (auto& p : parts) raw.insert(raw.end(), p.begin(), p.end());
  return to_five_seeds(std::move(raw));
}

namespace reference {

std::vector<CubePair> two_cube_representations(const Integer& N, long bound, bool allow_negative) {
  std::vector<CubePair> out;
  const long lo = allow_negative ? -bound : 1;
  for (long a = lo; a <= bound; ++a)
    for (long b = a; b <= bound; ++b)
      if (Integer(pow_integer(Integer(a), 3) + pow_integer(Integer(b), 3)) == N)
        out.emplace_back(a, b);
  return out;
}

Integer smallest_with_k_representations(unsigned k, long bound) {
  std::map<long long, unsigned> counts;
  for (long a = 1; a <= bound; ++a)
    for (long b = a; b <= bound; ++b)
      ++counts[static_cast<long long>(a) * a * a + static_cast<long long>(b) * b * b];
  const Integer certifiable = pow_integer(Integer(bound), 3);
  for (const auto& [value, count] : counts) {
    if (count < k) continue;
    Integer found(static_cast<long>(value));
    if (found <= certifiable) return found;
    break;
  }
  throw InsufficientBoundError("bound " + std::to_string(bound) + " cannot certify a value with " +
                               std::to_string(k) + " representations");
}

std::vector<CubicSeed> seed_search_three_cubes(long bound) {
  std::vector<RawSeed4> raw;
  for (long p = 1; p <= bound; ++p)
    for (long q = p; q <= bound; ++q)
      for (long r = q; r <= bound; ++r) {
        const long long sum = static_cast<long long>(p) * p * p +
                              static_cast<long long>(q) * q * q +
                              static_cast<long long>(r) * r * r;
        const long long s = icbrt(sum);
        if (cube128(s) == sum && s <= bound) raw.push_back({p, q, r, static_cast<long>(s)});
      }
  return to_cubic_seeds(std::move(raw));
}

std::vector<FiveCubeSeed> seed_search_five_cubes(long bound) {
  std::vector<RawSeed6> raw;
  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q)
      for (long r = -bound; r <= bound; ++r)
        for (long s = -bound; s <= bound; ++s) {
          if (p + s == 0) continue;
          for (long t = -bound; t <= bound; ++t) {
            if (q + t == 0) continue;
            const long long sum = static_cast<long long>(p) * p * p +
                                  static_cast<long long>(q) * q * q +
                                  static_cast<long long>(r) * r * r +
                                  static_cast<long long>(s) * s * s +
                                  static_cast<long long>(t) * t * t;
            const long long u = icbrt(sum);
            if (cube128(u) == sum && u >= -bound && u <= bound && r != u)
              raw.push_back({p, q, r, s, t, static_cast<long>(u)});
          }
        }
  return to_five_seeds(std::move(raw));
}

}  // namespace reference

std::string representations_to_json(const Integer& N, const std::vector<CubePair>& pairs) {
  json j;
  j["n"] = exact::to_string(N);
  j["pairs"] = json::array();
  for (const auto& [a, b] : pairs) j["pairs"].push_back(json::array({a, b}));
  return j.dump();
}

std::pair<Integer, std::vector<CubePair>> representations_from_json(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad representations JSON: ") + e.what());
  }
  try {
    Integer n = exact::parse_integer(j.at("n").get<std::string>());
    std::vector<CubePair> pairs;
    for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<long>(), p.at(1).get<long>());
    return {n, pairs};
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad representations JSON: ") + e.what());
  }
}

}  // namespace forge::oracle
