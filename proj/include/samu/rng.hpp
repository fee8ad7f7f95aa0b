#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace samu {

// FNV-1a, used for state digests and for deriving per-action seeds.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a(std::string_view s,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  return fnv1a(s.data(), s.size(), h);
}

// Uniform double in [0,1) from the top 53 bits of the generator output.
// mt19937_64 is fully specified by the standard; std::uniform_real_distribution
// is not, so runs would not be reproducible across library versions with it.
inline double uniform_unit(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace samu
