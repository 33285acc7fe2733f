#ifndef HAMSPAN_RNG_HPP
#define HAMSPAN_RNG_HPP

#include <cmath>
#include <cstdint>

// Counter-based pseudo-random stream (splitmix64). Every consumer addresses
// the stream by position, so samples are reproducible across machines and
// independent of how callers partition the work.
namespace hamspan::rng {

inline constexpr const char* kAlgorithm = "splitmix64";
inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Value at stream position `index` (0-based) of the stream keyed by `seed`.
inline constexpr uint64_t at(uint64_t seed, uint64_t index) {
  return mix64(seed + (index + 1) * kGolden);
}

// Uniform double in [0, 1).
inline constexpr double to_unit(uint64_t bits) {
  return double(bits >> 11) * 0x1.0p-53;
}

// Per-trial seed derived from a master seed; trials draw from disjoint
// streams so they can run in any order or in parallel.
inline constexpr uint64_t derive_seed(uint64_t master, uint64_t index) {
  return mix64(master ^ mix64(0xD1B54A32D192ED03ull + index));
}

// Threshold T such that "bits < T" fires with probability p (quantized at
// 2^-64). Callers must special-case p >= 1, which cannot be expressed as a
// strict u64 comparison; see Gnp sampling in graph.cpp.
inline uint64_t probability_threshold(double p) {
  if (p <= 0.0) return 0;
  double scaled = std::ldexp(p, 64);
  if (scaled >= 0x1.0p64) return ~0ull;
  return static_cast<uint64_t>(scaled);
}

}  // namespace hamspan::rng

#endif
