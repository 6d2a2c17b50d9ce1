#include "satmon/kernels.hpp"

#include <algorithm>

namespace satmon::kernels {

namespace {

// Sort canonically and drop exact duplicates. After this, elements of equal
// degree are distinct, so a strict divisor always has strictly smaller degree.
void sort_dedup(std::vector<Monomial>& ms) {
  std::sort(ms.begin(), ms.end(), canonical_less);
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}


void check_pair_cap(std::size_t a, std::size_t b, const char* where) {
  if (b != 0 && a > caps().closure_node_cap / b) {
    throw CapExceeded(std::string(where) + ": " + std::to_string(a) + "x" +
                      std::to_string(b) + " pairs exceed node cap " +
                      std::to_string(caps().closure_node_cap));
  }
}

std::vector<int> degrees_of(const std::vector<Monomial>& ms) {
  std::vector<int> degs(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) degs[i] = total_degree(ms[i]);
  return degs;
}

} // namespace

std::vector<Monomial> minimal_elements_serial(std::vector<Monomial> ms) {
  sort_dedup(ms);
  std::vector<Monomial> kept;
  kept.reserve(ms.size());
  std::vector<int> kept_degs;
  kept_degs.reserve(ms.size());
  for (auto& m : ms) {
    int d = total_degree(m);
    bool redundant = false;
    for (std::size_t j = 0; j < kept.size() && kept_degs[j] < d; ++j) {
      if (divides(kept[j], m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      kept.push_back(std::move(m));
      kept_degs.push_back(d);
    }
  }
  return kept;
}

std::vector<Monomial> minimal_elements_parallel(std::vector<Monomial> ms) {
  sort_dedup(ms);
  // Degree-stratified sweep: a strict divisor has strictly smaller degree,
  // so each degree level only has to test against the already finalized
  // minimal elements below it, and the level itself parallelizes freely.
  const std::vector<int> degs = degrees_of(ms);
  std::vector<Monomial> kept;
  kept.reserve(ms.size());
  std::size_t level_begin = 0;
  while (level_begin < ms.size()) {
    std::size_t level_end = level_begin;
    while (level_end < ms.size() && degs[level_end] == degs[level_begin]) ++level_end;
    const long long width = static_cast<long long>(level_end - level_begin);
    std::vector<char> keep(static_cast<std::size_t>(width), 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (width >= 256)
#endif
    for (long long off = 0; off < width; ++off) {
      const Monomial& candidate = ms[level_begin + static_cast<std::size_t>(off)];
      for (const auto& low : kept) {
        if (divides(low, candidate)) {
          keep[static_cast<std::size_t>(off)] = 0;
          break;
        }
      }
    }
    for (long long off = 0; off < width; ++off) {
      if (keep[static_cast<std::size_t>(off)]) {
        kept.push_back(std::move(ms[level_begin + static_cast<std::size_t>(off)]));
      }
    }
    level_begin = level_end;
  }
  return kept;
}

std::vector<Monomial> minimal_elements(std::vector<Monomial> ms) {
  if (ms.size() >= kParallelCutoff) {
    return minimal_elements_parallel(std::move(ms));
  }
  return minimal_elements_serial(std::move(ms));
}

namespace {

template <typename Combine>
std::vector<Monomial> pairwise_serial(const std::vector<Monomial>& a,
                                      const std::vector<Monomial>& b, Combine combine,
                                      const char* where) {
  check_pair_cap(a.size(), b.size(), where);
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a) {
    for (const auto& v : b) {
      out.push_back(combine(u, v));
    }
  }
  return out;
}

template <typename Combine>
std::vector<Monomial> pairwise_parallel(const std::vector<Monomial>& a,
                                        const std::vector<Monomial>& b, Combine combine,
                                        const char* where) {
  check_pair_cap(a.size(), b.size(), where);
  std::vector<Monomial> out(a.size() * b.size());
  const long long rows = static_cast<long long>(a.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[static_cast<std::size_t>(i) * b.size() + j] =
          combine(a[static_cast<std::size_t>(i)], b[j]);
    }
  }
  return out;
}

Monomial lcm_of(const Monomial& u, const Monomial& v) {
  std::vector<int> out(u.exps().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::max(u.exps()[i], v.exps()[i]);
  }
  return Monomial(std::move(out));
}

} // namespace

std::vector<Monomial> pairwise_products_serial(const std::vector<Monomial>& a,
                                               const std::vector<Monomial>& b) {
  return pairwise_serial(a, b, [](const Monomial& u, const Monomial& v) { return mul(u, v); },
                         "pairwise_products");
}

std::vector<Monomial> pairwise_products_parallel(const std::vector<Monomial>& a,
                                                 const std::vector<Monomial>& b) {
  return pairwise_parallel(a, b, [](const Monomial& u, const Monomial& v) { return mul(u, v); },
                           "pairwise_products");
}

std::vector<Monomial> pairwise_products(const std::vector<Monomial>& a,
                                        const std::vector<Monomial>& b) {
  if (a.size() * b.size() >= kParallelCutoff) {
    return pairwise_products_parallel(a, b);
  }
  return pairwise_products_serial(a, b);
}

std::vector<Monomial> pairwise_lcms_serial(const std::vector<Monomial>& a,
                                           const std::vector<Monomial>& b) {
  return pairwise_serial(a, b, lcm_of, "pairwise_lcms");
}

std::vector<Monomial> pairwise_lcms_parallel(const std::vector<Monomial>& a,
                                             const std::vector<Monomial>& b) {
  return pairwise_parallel(a, b, lcm_of, "pairwise_lcms");
}

std::vector<Monomial> pairwise_lcms(const std::vector<Monomial>& a,
                                    const std::vector<Monomial>& b) {
  if (a.size() * b.size() >= kParallelCutoff) {
    return pairwise_lcms_parallel(a, b);
  }
  return pairwise_lcms_serial(a, b);
}

} // namespace satmon::kernels
