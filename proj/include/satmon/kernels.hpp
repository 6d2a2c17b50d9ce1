#pragma once

#include <cstddef>
#include <vector>

#include "satmon/monomial.hpp"

namespace satmon::kernels {

// The quadratic inner loops of the library live here, each as a serial
// reference implementation plus an OpenMP variant. The unsuffixed entry
// points dispatch on input size; the serial forms are kept for testing and
// for the kernel benchmark. All variants must agree exactly.

/// Minimal elements of a monomial set under divisibility: removes duplicates
/// and anything strictly divisible by another element. Result is canonically
/// sorted (degree ascending, then lex descending).
std::vector<Monomial> minimal_elements_serial(std::vector<Monomial> ms);
std::vector<Monomial> minimal_elements_parallel(std::vector<Monomial> ms);
std::vector<Monomial> minimal_elements(std::vector<Monomial> ms);

/// All pairwise products a[i]*b[j], unreduced. Throws CapExceeded when the
/// result would exceed the closure node cap.
std::vector<Monomial> pairwise_products_serial(const std::vector<Monomial>& a,
                                               const std::vector<Monomial>& b);
std::vector<Monomial> pairwise_products_parallel(const std::vector<Monomial>& a,
                                                 const std::vector<Monomial>& b);
std::vector<Monomial> pairwise_products(const std::vector<Monomial>& a,
                                        const std::vector<Monomial>& b);

/// All pairwise componentwise maxima lcm(a[i], b[j]), unreduced.
std::vector<Monomial> pairwise_lcms_serial(const std::vector<Monomial>& a,
                                           const std::vector<Monomial>& b);
std::vector<Monomial> pairwise_lcms_parallel(const std::vector<Monomial>& a,
                                             const std::vector<Monomial>& b);
std::vector<Monomial> pairwise_lcms(const std::vector<Monomial>& a,
                                    const std::vector<Monomial>& b);

/// Size below which the dispatchers stay serial; at small sizes the scan is
/// memory-bound and threading only adds overhead.
inline constexpr std::size_t kParallelCutoff = 4096;

} // namespace satmon::kernels
