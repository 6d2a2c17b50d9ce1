// Benchmark of the OpenMP kernels against their serial reference
// implementations: divisibility minimalization and the pairwise
// product/lcm expansions, on random monomial sets and a Veronese square.

#include <chrono>
#include <cstdio>
#include <vector>

#include "satmon/kernels.hpp"
#include "satmon/rng.hpp"
#include "satmon/veronese.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace satmon;

namespace {

std::vector<Monomial> random_set(std::uint64_t seed, std::size_t count, int n, int deg_max) {
  SplitMix64 rng(seed);
  std::vector<Monomial> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    int deg = rng.next_int(1, deg_max);
    for (int s = 0; s < deg; ++s) {
      exps[rng.next_below(static_cast<std::uint64_t>(n))] += 1;
    }
    out.emplace_back(std::move(exps));
  }
  return out;
}

template <typename F>
double time_ms(F&& fn, int reps) {
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  return elapsed.count() / reps;
}

void report(const char* name, std::size_t size, double serial_ms, double parallel_ms) {
  std::printf("%-22s %9zu  serial %9.2f ms  parallel %9.2f ms  speedup %.2fx\n", name, size,
              serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: unavailable (parallel variants run serially)\n");
#endif

  for (std::size_t size : {2000u, 8000u, 20000u}) {
    std::vector<Monomial> set = random_set(7, size, 5, 12);
    std::vector<Monomial> serial_out, parallel_out;
    double serial_ms = time_ms([&] { serial_out = kernels::minimal_elements_serial(set); }, 3);
    double parallel_ms =
        time_ms([&] { parallel_out = kernels::minimal_elements_parallel(set); }, 3);
    if (serial_out != parallel_out) {
      std::printf("MISMATCH in minimal_elements at size %zu\n", size);
      return 1;
    }
    report("minimal_elements", size, serial_ms, parallel_ms);
  }

  // Squaring a mid-size Veronese generator set stresses the pairwise kernels;
  // minimalizing its lcm expansion is the dominant cost of ideal
  // intersections, the inner loop of every colon chain.
  MonomialIdeal veronese = veronese_ideal({{6, 6, 6, 6}, 12});
  const auto& gens = veronese.gens();
  {
    std::vector<Monomial> expansion = kernels::pairwise_lcms_serial(gens, gens);
    std::vector<Monomial> serial_out, parallel_out;
    double serial_ms =
        time_ms([&] { serial_out = kernels::minimal_elements_serial(expansion); }, 3);
    double parallel_ms =
        time_ms([&] { parallel_out = kernels::minimal_elements_parallel(expansion); }, 3);
    if (serial_out != parallel_out) {
      std::printf("MISMATCH in minimal_elements on the lcm expansion\n");
      return 1;
    }
    report("minimalize lcms", expansion.size(), serial_ms, parallel_ms);
  }
  {
    std::vector<Monomial> a, b;
    double serial_ms = time_ms([&] { a = kernels::pairwise_products_serial(gens, gens); }, 3);
    double parallel_ms =
        time_ms([&] { b = kernels::pairwise_products_parallel(gens, gens); }, 3);
    if (a != b) {
      std::printf("MISMATCH in pairwise_products\n");
      return 1;
    }
    report("pairwise_products", gens.size() * gens.size(), serial_ms, parallel_ms);
  }
  {
    std::vector<Monomial> a, b;
    double serial_ms = time_ms([&] { a = kernels::pairwise_lcms_serial(gens, gens); }, 3);
    double parallel_ms = time_ms([&] { b = kernels::pairwise_lcms_parallel(gens, gens); }, 3);
    if (a != b) {
      std::printf("MISMATCH in pairwise_lcms\n");
      return 1;
    }
    report("pairwise_lcms", gens.size() * gens.size(), serial_ms, parallel_ms);
  }
  return 0;
}
