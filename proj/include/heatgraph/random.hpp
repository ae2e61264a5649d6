#pragma once

#include <cstdint>
#include <random>

namespace heatgraph::detail {

// Distribution helpers on top of mt19937_64.  Hand-mapped rather than
// std::uniform_real_distribution so that streams are identical across
// standard libraries, which keeps seeded runs byte-reproducible.

inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double symmetric_uniform(std::mt19937_64& rng) {
  return 2.0 * unit_uniform(rng) - 1.0;  // [-1, 1)
}

inline std::size_t pick_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace heatgraph::detail
