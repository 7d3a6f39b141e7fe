// Compares the search kernels against their serial reference implementations
// and reports per-kernel timings plus thread scaling. Results are checked for
// equality while timing, so a mismatch aborts the run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forge/oracle.hpp"

using namespace forge;
using Clock = std::chrono::steady_clock;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    auto start = Clock::now();
    fn();
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (s < best) best = s;
  }
  return best;
}

void row(const char* name, double ref_s, double serial_s, double parallel_s) {
  std::printf("%-28s %10.2f %12.2f %14.2f %8.2fx\n", name, ref_s * 1e3, serial_s * 1e3,
              parallel_s * 1e3, parallel_s > 0 ? serial_s / parallel_s : 0.0);
}

template <typename T>
void expect_equal(const T& a, const T& b, const char* what) {
  if (!(a == b)) {
    std::fprintf(stderr, "mismatch between implementations in %s\n", what);
    std::exit(1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  if (reps < 1) reps = 1;
#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  std::printf("threads available: %d, best of %d runs, times in ms\n\n", threads, reps);
  std::printf("%-28s %10s %12s %14s %8s\n", "kernel", "reference", "kernel(1)", "kernel(all)",
              "speedup");

  {
    const exact::Integer n(1729);
    const long bound = 3000;
    auto ref = oracle::reference::two_cube_representations(n, bound, true);
    auto fast1 = oracle::two_cube_representations(n, bound, true, 1);
    auto fastN = oracle::two_cube_representations(n, bound, true, 0);
    expect_equal(ref, fast1, "two_cube_representations");
    expect_equal(fast1, fastN, "two_cube_representations");
    double r = time_best_of(reps, [&] { oracle::reference::two_cube_representations(n, bound, true); });
    double s1 = time_best_of(reps, [&] { oracle::two_cube_representations(n, bound, true, 1); });
    double sn = time_best_of(reps, [&] { oracle::two_cube_representations(n, bound, true, 0); });
    row("two-cube reps (b=3000)", r, s1, sn);
  }

  {
    const unsigned k = 3;
    const long bound = 500;
    expect_equal(oracle::reference::smallest_with_k_representations(k, bound),
                 oracle::smallest_with_k_representations(k, bound, 1), "smallest_with_k");
    double r = time_best_of(reps, [&] { oracle::reference::smallest_with_k_representations(k, bound); });
    double s1 = time_best_of(reps, [&] { oracle::smallest_with_k_representations(k, bound, 1); });
    double sn = time_best_of(reps, [&] { oracle::smallest_with_k_representations(k, bound, 0); });
    row("taxicab Ta(3) (b=500)", r, s1, sn);
  }

  {
    const long bound = 220;
    auto ref = oracle::reference::seed_search_three_cubes(bound);
    auto fast = oracle::seed_search_three_cubes(bound, 1);
    expect_equal(ref.size(), fast.size(), "seed_search_three_cubes");
    double r = time_best_of(reps, [&] { oracle::reference::seed_search_three_cubes(bound); });
    double s1 = time_best_of(reps, [&] { oracle::seed_search_three_cubes(bound, 1); });
    double sn = time_best_of(reps, [&] { oracle::seed_search_three_cubes(bound, 0); });
    row("three-cube seeds (b=220)", r, s1, sn);
  }

  {
    const long bound = 5;
    auto ref = oracle::reference::seed_search_five_cubes(bound);
    auto fast = oracle::seed_search_five_cubes(bound, 1);
    expect_equal(ref.size(), fast.size(), "seed_search_five_cubes");
    double r = time_best_of(reps, [&] { oracle::reference::seed_search_five_cubes(bound); });
    double s1 = time_best_of(reps, [&] { oracle::seed_search_five_cubes(bound, 1); });
    double sn = time_best_of(reps, [&] { oracle::seed_search_five_cubes(bound, 0); });
    row("five-cube seeds (b=5)", r, s1, sn);
  }

  return 0;
}
