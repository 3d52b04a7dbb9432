#ifndef JSS_RNG_HPP
#define JSS_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace jss {

// Seeded random stream with portable draw semantics.
//
// The engine is std::mt19937_64, whose output sequence is pinned by the
// C++ standard. The standard *distributions* are not pinned (libstdc++ and
// libc++ disagree), so the bounded draws below are implemented here:
//
//   next_u64()          raw engine output
//   uniform_int(lo,hi)  bitmask rejection over next_u64(); unbiased
//   uniform01()         (next_u64() >> 11) * 2^-53, uniform in [0,1)
//
// Identical seeds therefore give identical draw sequences on every
// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [lo, hi], hi >= lo.
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range <= 1) return lo;
    std::uint64_t mask = range - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t draw;
    do {
      draw = engine_() & mask;
    } while (draw >= range);
    return lo + static_cast<int>(draw);
  }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a 64-bit over a tag string.
constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic sub-seed for a labelled task: splitmix64(master ^ fnv1a64(tag)).
// Used to give every generated instance and every benchmark run an
// independent stream so results do not depend on execution order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
  return splitmix64(master ^ fnv1a64(tag));
}

}  // namespace jss

#endif
