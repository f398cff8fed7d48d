// SPDX-License-Identifier: Apache-2.0

// Runtime backend selection. Resolved once, on first kernel call or on an
// explicit set_backend(); the choice never changes mid-computation unless the
// caller forces it (tests do, to compare backends).

#include "tpgraph/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace tpgraph::kernels {

const KernelTable& scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_table();
#endif
#if defined(__aarch64__)
const KernelTable& neon_table();
#endif

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect_backend() {
  if (const char* env = std::getenv("TPGRAPH_BACKEND")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::avx2))
      return Backend::avx2;
    if (std::strcmp(env, "neon") == 0 && backend_available(Backend::neon))
      return Backend::neon;
    // unknown or unavailable value falls through to auto
  }
#if defined(__aarch64__)
  return Backend::neon;
#else
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
#endif
}

std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const KernelTable& resolve() {
  const KernelTable* t = g_table.load(std::memory_order_acquire);
  if (t) return *t;
  Backend b = detect_backend();
  g_backend.store(b, std::memory_order_relaxed);
  t = &table_for(b);
  g_table.store(t, std::memory_order_release);
  return *t;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return cpu_has_avx2();
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table_for(Backend b) {
  switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
      return avx2_table();
#endif
#if defined(__aarch64__)
    case Backend::neon:
      return neon_table();
#endif
    default:
      return scalar_table();
  }
}

Backend active_backend() {
  resolve();
  return g_backend.load(std::memory_order_relaxed);
}

bool set_backend(Backend b) {
  if (!backend_available(b)) return false;
  g_backend.store(b, std::memory_order_relaxed);
  g_table.store(&table_for(b), std::memory_order_release);
  return true;
}

double reduce_sum(const double* x, std::size_t n) {
  return resolve().reduce_sum(x, n);
}

double dot(const double* x, const double* y, std::size_t n) {
  return resolve().dot(x, y, n);
}

void gather(const double* src, const std::uint32_t* idx, std::size_t n,
            double* dst) {
  resolve().gather(src, idx, n, dst);
}

void subtract_scalar(double* x, std::size_t n, double c) {
  resolve().subtract_scalar(x, n, c);
}

}  // namespace tpgraph::kernels
