#pragma once

// Seedable, portable randomness. mt19937_64 is fully specified by the
// standard, so streams are bit-exact across platforms; uniform doubles are
// derived explicitly rather than through distribution objects, which the
// standard leaves implementation-defined.

#include <cstdint>
#include <random>

namespace qturan {

inline constexpr const char* kRngName = "mt19937_64/top53";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1), 53-bit resolution.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qturan
