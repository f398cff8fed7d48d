// SPDX-License-Identifier: Apache-2.0

// NEON kernels for aarch64. NEON is part of the baseline ISA there, so no
// runtime probe is needed beyond the architecture check.

#include "tpgraph/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>
#include <cstdint>

namespace tpgraph::kernels {

namespace {

double neon_reduce_sum(const double* x, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vld1q_f64(x + i));
    acc1 = vaddq_f64(acc1, vld1q_f64(x + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double neon_dot(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void neon_gather(const double* src, const std::uint32_t* idx, std::size_t n,
                 double* dst) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[idx[i]];
}

void neon_subtract_scalar(double* x, std::size_t n, double c) {
  const float64x2_t vc = vdupq_n_f64(c);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vsubq_f64(vld1q_f64(x + i), vc));
  }
  for (; i < n; ++i) x[i] -= c;
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable t{neon_reduce_sum, neon_dot, neon_gather,
                             neon_subtract_scalar};
  return t;
}

}  // namespace tpgraph::kernels

#endif  // aarch64
