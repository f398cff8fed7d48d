// SPDX-License-Identifier: Apache-2.0

#include "tpgraph/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <unordered_set>

#include "tpgraph/errors.hpp"

namespace tpgraph::rng {

namespace {

constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

inline void philox_round(Counter& c, const Key& k) {
  std::uint64_t hi0, lo0, hi1, lo1;
  mulhilo(kPhiloxM0, c[0], hi0, lo0);
  mulhilo(kPhiloxM1, c[2], hi1, lo1);
  c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

Block philox4x64(Counter counter, Key key) {
  for (int round = 0; round < 10; ++round) {
    philox_round(counter, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return counter;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> fields) {
  std::uint64_t h = base;
  for (std::uint64_t f : fields) h = splitmix64(h ^ f);
  return h;
}

std::uint64_t double_bits(double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  return bits;
}

Stream::Stream(std::uint64_t seed, Domain domain, std::uint64_t stream_id)
    : key_{seed, static_cast<std::uint64_t>(domain)},
      counter_{stream_id, 0, 0, 0},
      buffer_pos_(4) {}

void Stream::refill() {
  buffer_ = philox4x64(counter_, key_);
  ++counter_[1];  // 2^64 blocks per stream is plenty; no carry needed
  buffer_pos_ = 0;
}

std::uint64_t Stream::next_u64() {
  if (buffer_pos_ == 4) refill();
  return buffer_[buffer_pos_++];
}

double Stream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Stream::next_below(std::uint64_t bound) {
  // Classic rejection: discard draws from the biased remainder zone.
  const std::uint64_t limit = bound * (~0ULL / bound);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

double Stream::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  for (;;) {
    const double u = 2.0 * next_unit() - 1.0;
    const double v = 2.0 * next_unit() - 1.0;
    const double s = u * u + v * v;
    if (s >= 1.0 || s == 0.0) continue;
    const double factor = std::sqrt(-2.0 * portable_log(s) / s);
    spare_normal_ = v * factor;
    has_spare_ = true;
    return u * factor;
  }
}

double portable_log(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw NumericError("portable_log: argument must be positive and finite");

  // x = m * 2^e with m in [sqrt(1/2), sqrt(2)); then
  // log m = 2 atanh(s) with s = (m-1)/(m+1), |s| <= 0.1716.
  int e = 0;
  double m = std::frexp(x, &e);  // m in [0.5, 1)
  if (m < 0.70710678118654752440) {
    m *= 2.0;
    e -= 1;
  }
  const double s = (m - 1.0) / (m + 1.0);
  const double z = s * s;
  // atanh series, coefficients 1/(2k+1); 12 terms bound the truncation
  // error below one ulp for |s| <= 0.1716.
  double poly = 1.0 / 23.0;
  poly = poly * z + 1.0 / 21.0;
  poly = poly * z + 1.0 / 19.0;
  poly = poly * z + 1.0 / 17.0;
  poly = poly * z + 1.0 / 15.0;
  poly = poly * z + 1.0 / 13.0;
  poly = poly * z + 1.0 / 11.0;
  poly = poly * z + 1.0 / 9.0;
  poly = poly * z + 1.0 / 7.0;
  poly = poly * z + 1.0 / 5.0;
  poly = poly * z + 1.0 / 3.0;
  poly = poly * z + 1.0;
  const double log_m = 2.0 * s * poly;

  // Split log(2) so e*log2 keeps full precision for large |e|.
  const double ln2_hi = 6.93147180369123816490e-01;
  const double ln2_lo = 1.90821492927058770002e-10;
  const double de = static_cast<double>(e);
  return de * ln2_hi + (de * ln2_lo + log_m);
}

std::vector<std::uint32_t> sample_without_replacement(Stream& stream,
                                                      std::uint64_t n,
                                                      std::uint64_t m) {
  if (m > n) throw ValueError("sample_without_replacement: m > n");
  if (n > 0xFFFFFFFFULL)
    throw ValueError("sample_without_replacement: population exceeds 2^32");
  // Floyd's algorithm: uniform over m-subsets, O(m) draws.
  std::unordered_set<std::uint32_t> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  for (std::uint64_t j = n - m; j < n; ++j) {
    const auto r = static_cast<std::uint32_t>(stream.next_below(j + 1));
    if (!chosen.insert(r).second) chosen.insert(static_cast<std::uint32_t>(j));
  }
  std::vector<std::uint32_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tpgraph::rng
