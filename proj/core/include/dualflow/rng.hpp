#pragma once

#include <cstdint>

namespace dualflow {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// distributions so that generated instances are reproducible independent
/// of the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  /// Uniform integer in [lo, hi] inclusive.
  long next_range(long lo, long hi) {
    return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Derives an independent stream; detaches from this generator's sequence.
  Rng fork(std::uint64_t salt) const { return Rng(state_ ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL)); }

 private:
  std::uint64_t state_;
};

}  // namespace dualflow
