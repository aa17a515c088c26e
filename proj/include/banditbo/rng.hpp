#pragma once

#include <cstdint>
#include <random>

namespace banditbo {

// Deterministic random stream with named splitting. A stream is fully
// identified by a 64-bit seed; split() derives a child seed by hashing the
// parent seed with up to three tag words. Consumers that agree on the tag
// tuple see identical randomness whether they run serially or in parallel,
// and splitting never advances the parent stream.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  // Uniform double in [0, 1) built from 53 random bits.
  double uniform();
  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal();
  // Uniform integer in [0, n); consumes one uniform.
  int uniform_int(int n);

  RngStream split(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

// Stream tags: every consumer of randomness in a run owns a stream derived
// from the master seed and one of these kinds, so adding or reordering
// consumers cannot silently shift anyone else's draws.
namespace streams {
inline constexpr std::uint64_t kInitPoints = 1;  // (kind, category)
inline constexpr std::uint64_t kInitNoise = 2;   // (kind, category)
inline constexpr std::uint64_t kThompson = 3;    // (kind, round) then (slot, category)
inline constexpr std::uint64_t kArmChoice = 4;   // (kind, round) then (slot)
inline constexpr std::uint64_t kEvalNoise = 5;   // (kind, round) then (slot)
}  // namespace streams

}  // namespace banditbo
