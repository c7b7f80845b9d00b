#pragma once

#include <cstdint>
#include <random>

namespace netdist {

/// Seed contract: (master, stream) fully determines every random draw.
///
/// Substreams are keyed by SplitMix64-mixing (master, stream, attempt) into
/// the 64-bit state of std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Uniform variates are derived from raw 64-bit outputs here
/// rather than through <random> distributions, whose algorithms are
/// implementation-defined, so samples are identical across standard libraries.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(Seed seed, std::uint64_t attempt = 0)
      : engine_(splitmix64(splitmix64(splitmix64(seed.master) ^ seed.stream) ^ attempt)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, bound) by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netdist
