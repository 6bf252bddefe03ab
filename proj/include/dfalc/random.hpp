#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace dfalc {

// std::mt19937_64 is specified exactly by the standard; the helpers below
// avoid the implementation-defined std distributions so that runs reproduce
// bit-exactly across standard libraries.
using Rng = std::mt19937_64;

/// Independent stream for a (seed, purpose) pair.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform in [0, 1).
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform in [lo, hi].
inline double uniform_in(Rng& rng, double lo, double hi) {
  const double x = lo + (hi - lo) * uniform01(rng);
  return x > hi ? hi : x;
}

/// Uniform in {0, ..., n-1}; n > 0.
inline std::size_t uniform_below(Rng& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

}  // namespace dfalc
