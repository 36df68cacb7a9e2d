#pragma once

#include <cstdint>
#include <random>

namespace projclust {

/// Tag written into reports so stored experiments can be tied to the exact
/// sampling pipeline that produced them.
inline constexpr const char* kRngVersion = "mt19937_64+box-muller/v1";

/// Seeded generator with portable transforms. std::mt19937_64 output is fixed
/// by the standard; the uniform, bounded-integer and Gaussian transforms are
/// written out here so draws do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Standard normal via the basic Box-Muller transform; the second variate
  /// of each pair is cached.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace projclust
