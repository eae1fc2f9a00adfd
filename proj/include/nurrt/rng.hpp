#pragma once

#include <cstdint>
#include <random>

namespace nurrt {

// Seeded generator with fixed reductions. The mt19937_64 output sequence is
// pinned by the standard, and the reductions below avoid std distributions
// (whose draw sequences are implementation-defined), so a seed reproduces the
// exact same draw sequence everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform index in [0, n). Multiply-shift reduction; bias is at most n/2^64.
  std::size_t uniform_index(std::size_t n) {
    const auto x = static_cast<unsigned __int128>(next_u64());
    return static_cast<std::size_t>((x * n) >> 64);
  }

  // Uniform double in [lo, hi) with 53-bit resolution.
  double uniform_real(double lo, double hi) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nurrt
