#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace ovdiam::detail {

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations so outputs match across toolchains.
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, bound).
inline std::size_t index_draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(unit_draw(rng) * static_cast<double>(bound));
}

}  // namespace ovdiam::detail
