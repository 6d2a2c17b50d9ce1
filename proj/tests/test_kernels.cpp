#include <doctest.h>

#include "satmon/kernels.hpp"
#include "satmon/rng.hpp"

using namespace satmon;

namespace {

std::vector<Monomial> random_set(std::uint64_t seed, std::size_t count, int n, int deg_max) {
  SplitMix64 rng(seed);
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    int deg = rng.next_int(0, deg_max);
    for (int s = 0; s < deg; ++s) {
      exps[rng.next_below(static_cast<std::uint64_t>(n))] += 1;
    }
    out.emplace_back(std::move(exps));
  }
  return out;
}

} // namespace

TEST_CASE("minimal_elements basics") {
  std::vector<Monomial> in = {Monomial({1, 0}), Monomial({2, 0}), Monomial({1, 1})};
  auto out = kernels::minimal_elements_serial(in);
  REQUIRE(out.size() == 1);
  CHECK(out.front() == Monomial({1, 0}));

  CHECK(kernels::minimal_elements_serial({}).empty());

  // duplicates collapse, incomparables survive
  std::vector<Monomial> sf = {Monomial({1, 1, 0}), Monomial({1, 0, 1}), Monomial({0, 1, 1}),
                              Monomial({1, 1, 0})};
  auto kept = kernels::minimal_elements_serial(sf);
  CHECK(kept.size() == 3);
}

TEST_CASE("serial and parallel variants agree") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
    auto set = random_set(seed, 3000, 4, 8);
    auto serial = kernels::minimal_elements_serial(set);
    auto parallel = kernels::minimal_elements_parallel(set);
    auto dispatched = kernels::minimal_elements(set);
    CHECK(serial == parallel);
    CHECK(serial == dispatched);

    auto small_a = random_set(seed ^ 77, 40, 4, 5);
    auto small_b = random_set(seed ^ 99, 35, 4, 5);
    CHECK(kernels::pairwise_products_serial(small_a, small_b) ==
          kernels::pairwise_products_parallel(small_a, small_b));
    CHECK(kernels::pairwise_lcms_serial(small_a, small_b) ==
          kernels::pairwise_lcms_parallel(small_a, small_b));
  }
}

TEST_CASE("pairwise kernels respect the node cap") {
  auto a = random_set(5, 100, 3, 4);
  std::size_t old_cap = caps().closure_node_cap;
  caps().closure_node_cap = 1000;
  CHECK_THROWS_AS(kernels::pairwise_products(a, a), CapExceeded);
  caps().closure_node_cap = old_cap;
}

TEST_CASE("minimal_elements output is canonically sorted and reduced") {
  auto set = random_set(9, 500, 3, 6);
  auto out = kernels::minimal_elements(set);
  for (std::size_t i = 1; i < out.size(); ++i) {
    CHECK(canonical_less(out[i - 1], out[i]));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (i != j) CHECK(!divides(out[i], out[j]));
    }
  }
}
