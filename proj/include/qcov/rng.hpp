// Seed derivation for reproducible simulation.
//
// One root seed drives a whole run. Component engines (drivers, initial
// states, exponential arrivals, observation noise) draw from sub-streams
// derived by fixed offsets, so changing e.g. the noise stream leaves the
// latent paths untouched. Replicates use root_seed ^ replicate_index.
#pragma once

#include <cstdint>
#include <random>

namespace qcov {

enum class Stream : std::uint64_t {
  kDrivers = 1,
  kInitialStates = 2,
  kExponentials = 3,
  kNoise = 4,
};

// splitmix64 finalizer; decorrelates nearby seeds before they reach the
// mt19937_64 state.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t root, Stream s) {
  return mix64(root + 0x100000001b3ULL * static_cast<std::uint64_t>(s));
}

inline std::mt19937_64 make_engine(std::uint64_t root, Stream s) {
  return std::mt19937_64(substream_seed(root, s));
}

inline std::uint64_t replicate_seed(std::uint64_t root, std::uint64_t rep) {
  return root ^ rep;
}

}  // namespace qcov
