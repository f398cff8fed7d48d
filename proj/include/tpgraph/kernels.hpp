// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

// Data-parallel inner loops used by the covariance path: row gathers,
// reductions and dot products over observation columns. Each kernel has a
// scalar reference implementation and SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected once at runtime from CPU capabilities. The scalar and
// SIMD variants are equivalence-tested against each other; SIMD reductions
// may differ from scalar ones by reassociation rounding only.
//
// The TPGRAPH_BACKEND environment variable ("scalar", "avx2", "neon",
// "auto") overrides the automatic choice before first use.

namespace tpgraph::kernels {

enum class Backend { scalar = 0, avx2 = 1, neon = 2 };

const char* backend_name(Backend b);

// Backend used by subsequent kernel calls.
Backend active_backend();

// True iff `b` is runnable on this machine.
bool backend_available(Backend b);

// Force a backend; returns false (leaving the selection unchanged) when the
// requested backend is unavailable.
bool set_backend(Backend b);

// Sum of x[0..n).
double reduce_sum(const double* x, std::size_t n);

// Inner product of x[0..n) and y[0..n).
double dot(const double* x, const double* y, std::size_t n);

// dst[k] = src[idx[k]] for k in [0, n).
void gather(const double* src, const std::uint32_t* idx, std::size_t n,
            double* dst);

// x[k] -= c for k in [0, n). Bitwise identical across backends.
void subtract_scalar(double* x, std::size_t n, double c);

// Per-backend entry points, exposed for equivalence testing.
struct KernelTable {
  double (*reduce_sum)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  void (*gather)(const double*, const std::uint32_t*, std::size_t, double*);
  void (*subtract_scalar)(double*, std::size_t, double);
};

const KernelTable& table_for(Backend b);

}  // namespace tpgraph::kernels
