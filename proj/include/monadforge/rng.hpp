#pragma once

#include <cstdint>
#include <string_view>

namespace monadforge {

// SplitMix64. Used instead of <random> distributions so that generated
// instances are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be positive.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  // Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool chance(int num, int den) { return below(den) < num; }

  // Independent child stream derived from this seed and a tag.
  static Rng derive(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001B3ULL;
    }
    Rng mix(seed ^ h);
    mix.next();
    Rng out(mix.next() ^ (index * 0xD1B54A32D192ED03ULL));
    out.next();
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace monadforge
