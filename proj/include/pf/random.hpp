#pragma once

#include <cstdint>
#include <random>

namespace pf {

// std::mt19937_64 output is pinned by the standard, but the std
// distributions are not; everything below is fully specified so seeded
// runs produce identical bytes on any platform.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform integer in [0, n) by rejection; n >= 1.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

/// Uniform m-subset of items via a Fisher-Yates prefix; `items` is copied.
template <typename T>
std::vector<T> sample_prefix(std::vector<T> items, std::size_t m, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = i + uniform_below(rng, items.size() - i);
    std::swap(items[i], items[j]);
  }
  items.resize(m);
  return items;
}

}  // namespace pf
