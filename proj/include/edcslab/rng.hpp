#pragma once

#include <cstdint>
#include <random>

namespace edcslab {

// SplitMix64 mixing step, used to derive seeds for child streams.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of a labelled child stream. The harness derives trial streams as
// derive_seed(master_seed, trial_index) and each stage inside a trial as
// derive_seed(trial_seed, stage_label), so concurrent trials never share
// generator state and every run is reproducible from the master seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t label) {
  return splitmix64(base ^ (0x9e3779b97f4a7c15ULL * (label + 1)));
}

inline std::mt19937_64 make_rng(std::uint64_t base, std::uint64_t label) {
  return std::mt19937_64(derive_seed(base, label));
}

// Stage labels for the sub-streams of one protocol trial. Trial seeds are
// derived under kStreamTrialRoot so trial indices never collide with stage
// labels.
enum RngStream : std::uint64_t {
  kStreamPartition = 1,
  kStreamSample = 2,
  kStreamEdcsFix = 3,
  kStreamMPrime = 4,
  kStreamAssignment = 5,
  kStreamTrialRoot = 6,
  kStreamAdversarialH = 7,
};

}  // namespace edcslab
