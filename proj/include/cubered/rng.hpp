#pragma once

#include <cstdint>

namespace cubered {

/// splitmix64 finalizer used as a stateless counter-based generator: the
/// stream is a pure function of the key, so parallel consumers can draw
/// sample i directly without sharing state.
inline std::uint64_t mix_u64(std::uint64_t key) {
  std::uint64_t z = key + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform on the open interval (0,1): 53-bit grid offset by half a step,
/// so 0 and 1 are never produced (integrands may be singular at the edges).
inline double uniform_open01(std::uint64_t key) {
  return (static_cast<double>(mix_u64(key) >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace cubered
