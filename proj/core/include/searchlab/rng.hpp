#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace searchlab {

// All randomness flows through mt19937_64 plus the helpers below; std::
// distributions are avoided because their outputs are implementation-defined.
using Rng = std::mt19937_64;

// SplitMix64 step; used to derive independent seeds from (seed, tag) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return mix64(seed ^ mix64(tag));
}

// Uniform double in [0, 1) from the top 53 bits.
inline double rng_uniform(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). n must be positive.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) { return rng() % n; }

// Fisher-Yates; deterministic for a given rng state.
template <typename T>
void rng_shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace searchlab
