#ifndef RGG_RNG_HPP
#define RGG_RNG_HPP

#include <cstdint>
#include <limits>

namespace rgg {

// Fully specified 64-bit generator (splitmix64). Using a self-contained
// generator keeps sampled streams bit-identical across standard library
// implementations, which the determinism contract requires.
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }

private:
  std::uint64_t state_;
};

// Stream-split rule: shard k of a run seeded with `seed` uses mix_seed(seed, k).
// Fixed mixing function so sharded runs are reproducible.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t shard) {
  SplitMix64 g(seed ^ (0xD1B54A32D192ED03ULL * (shard + 1)));
  return g();
}

} // namespace rgg

#endif
