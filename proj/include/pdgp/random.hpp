#pragma once

#include <cstdint>
#include <random>

namespace pdgp {

/// Seeded generator with a fixed, implementation-independent output sequence.
///
/// std::mt19937_64 is fully specified by the standard, but the standard
/// distributions are not, so the derived draws below are written out by hand.
/// Changing any of them changes every seeded corpus; bump kVersion if so.
class Rng {
 public:
  static constexpr const char* kVersion = "mt19937_64/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pdgp
