// rng.hpp
//
// Counter-based random streams: every variate is a pure function of
// (key, counter), so substreams derived per (trajectory, mode, component)
// are reproducible regardless of scheduling or worker count.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace gfn::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer
inline std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// child key for the index-th substream of key
inline std::uint64_t derive(std::uint64_t key, std::uint64_t index) {
  return mix(key + (index + 1) * kGolden);
}

// j-th raw word of the stream
inline std::uint64_t word(std::uint64_t key, std::uint64_t j) {
  return mix(key + (j + 1) * kGolden);
}

// uniform on (0, 1]
inline double uniform(std::uint64_t key, std::uint64_t j) {
  return ((word(key, j) >> 11) + 1) * 0x1.0p-53;
}

// random-access stream of standard normals (Box-Muller, cosine branch)
struct NormalStream {
  std::uint64_t key = 0;

  double normal(std::uint64_t j) const {
    const double u1 = uniform(key, 2 * j);
    const double u2 = uniform(key, 2 * j + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }
};

}  // namespace gfn::rng
