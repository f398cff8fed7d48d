// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

// Counter-based random number generation (Philox4x64-10). Every random
// quantity in the library is a pure function of (seed, domain, stream
// position), which is what makes runs replayable from any point: batch t of a
// learner run, trial k of a sweep cell, and so on can each be regenerated in
// isolation.
//
// Normal deviates use the Marsaglia polar method on top of the uniform
// stream. The required logarithm is computed by portable_log() below rather
// than libm, so the sampled values are bitwise identical across platforms.

namespace tpgraph::rng {

// Stream domains keep unrelated consumers of the same user seed apart.
enum class Domain : std::uint64_t {
  gaussian = 1,       // sample_gaussian
  batch = 2,          // learner batch draws
  synth_random = 3,   // random-family generator
  subset_sample = 4,  // condition diagnostics subset draws
  overlap = 5,        // overlap tail experiment
};

using Counter = std::array<std::uint64_t, 4>;
using Key = std::array<std::uint64_t, 2>;
using Block = std::array<std::uint64_t, 4>;

// One application of the Philox4x64 bijection, 10 rounds.
Block philox4x64(Counter counter, Key key);

// SplitMix64 finalizer; also the building block of derive_seed().
std::uint64_t splitmix64(std::uint64_t x);

// Documented seed-derivation chain: h := splitmix64(h XOR field) applied
// left to right over the fields. Used to key sweep cells, per-gamma runs and
// sub-streams so any one of them is reproducible in isolation.
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> fields);

// Bit pattern of a double, for hashing gamma values into seeds.
std::uint64_t double_bits(double x);

// Sequential view of the counter space for one (seed, domain, stream_id).
// Blocks are philox4x64({stream_id, block_index, 0, 0}, {seed, domain}).
class Stream {
public:
  Stream(std::uint64_t seed, Domain domain, std::uint64_t stream_id);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double next_unit();

  // Uniform integer in [0, bound) by rejection; unbiased, bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

  // Standard normal deviate (polar method; consumes a variable number of
  // uniforms, holds the paired deviate for the next call).
  double next_normal();

private:
  void refill();

  Key key_;
  Counter counter_;
  Block buffer_;
  int buffer_pos_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

// Natural logarithm evaluated with fixed-order arithmetic (argument
// reduction plus an atanh series), accurate to a few ulp. Exists so sampled
// data does not depend on the host libm. Requires x > 0 and finite.
double portable_log(double x);

// M distinct indices drawn uniformly without replacement from [0, n),
// returned sorted ascending. Floyd's algorithm; fully determined by the
// stream's (seed, domain, stream_id).
std::vector<std::uint32_t> sample_without_replacement(Stream& stream,
                                                      std::uint64_t n,
                                                      std::uint64_t m);

}  // namespace tpgraph::rng
