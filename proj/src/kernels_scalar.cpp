// SPDX-License-Identifier: Apache-2.0

// Reference kernels. Plain loops in fixed order; every SIMD backend is
// checked against these.

#include <cstddef>
#include <cstdint>

#include "tpgraph/kernels.hpp"

namespace tpgraph::kernels {

namespace {

double scalar_reduce_sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double scalar_dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void scalar_gather(const double* src, const std::uint32_t* idx, std::size_t n,
                   double* dst) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[idx[i]];
}

void scalar_subtract_scalar(double* x, std::size_t n, double c) {
  for (std::size_t i = 0; i < n; ++i) x[i] -= c;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{scalar_reduce_sum, scalar_dot, scalar_gather,
                             scalar_subtract_scalar};
  return t;
}

}  // namespace tpgraph::kernels
